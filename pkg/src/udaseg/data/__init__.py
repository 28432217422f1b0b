from .phantom import PhantomSpec, PatientAnatomy, generate_source_sample
from .shift import ShiftParams, apply_domain_shift
from .augment import AugmentRanges, AugmentParams, augment, apply_augment, draw_augment_params
from .manifest import (
    DatasetManifest,
    ManifestEntry,
    Sample,
    load_dataset,
    load_samples,
    read_array,
    save_dataset,
    split_patient_level,
    write_mask,
    write_slice,
)
from .build import DataConfig, build_datasets

__all__ = [
    "AugmentParams",
    "AugmentRanges",
    "DataConfig",
    "DatasetManifest",
    "ManifestEntry",
    "PatientAnatomy",
    "PhantomSpec",
    "Sample",
    "ShiftParams",
    "apply_augment",
    "apply_domain_shift",
    "augment",
    "build_datasets",
    "draw_augment_params",
    "generate_source_sample",
    "load_dataset",
    "load_samples",
    "read_array",
    "save_dataset",
    "split_patient_level",
    "write_mask",
    "write_slice",
]
