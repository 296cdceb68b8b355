# Problem features and training labels
from cadorder.features.extract import FEATURE_COUNT, FEATURE_NAMES, FeatureVector, extract_features
from cadorder.features.normalize import NormalizationParams, fit_normalization, apply_normalization
from cadorder.features.labelling import LabeledExample, is_best, label_example
from cadorder.features.sparse_format import write_examples, read_examples

__all__ = [
    "FEATURE_COUNT",
    "FEATURE_NAMES",
    "FeatureVector",
    "extract_features",
    "NormalizationParams",
    "fit_normalization",
    "apply_normalization",
    "LabeledExample",
    "is_best",
    "label_example",
    "write_examples",
    "read_examples",
]
