"""Adversarial domain-adaptation segmentation on procedural lung phantoms.

A labeled "source" phantom dataset and an unlabeled intensity-shifted
"target" dataset jointly train a segmentation network (feature extractor +
pixel-wise classifier) together with an image-space generator and a 4-way
patch discriminator, so that the segmenter transfers to the shifted domain
without ever seeing target annotations.
"""

__version__ = "0.1.0"
