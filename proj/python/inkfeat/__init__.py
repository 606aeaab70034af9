"""Python face of the inkfeat digital-ink feature extraction core."""

try:
    from ._inkfeat import *  # noqa: F401,F403
    from ._inkfeat import InkError  # noqa: F401
except ImportError:  # development layout: extension on PYTHONPATH
    from _inkfeat import *  # noqa: F401,F403
    from _inkfeat import InkError  # noqa: F401

__all__ = [
    "Sample",
    "Stroke",
    "Gesture",
    "FeatureValue",
    "InkDocument",
    "Region",
    "DocumentGesture",
    "ClassifierModel",
    "InkError",
    "gesture",
    "validate",
    "catalog",
    "extract",
    "extract_csv",
    "parse_document",
    "serialize_document",
    "symbol_classes",
    "synthesize",
    "train",
    "predict",
    "serialize_model",
    "parse_model",
    "cdt_report",
]
