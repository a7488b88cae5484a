import logging
from dataclasses import dataclass

import pandas as pd

logger = logging.getLogger(__name__)

DEFAULT_SEED = 42

# Downstream dataset sizes (train, valid, test) after preprocessing
REFERENCE_SIZES = {
    "ner-arabic": (3973, None, None),
    "ner-maltese": (155, 43, 2109),
    "sa-arabic": (15305, None, None),
    "sa-maltese": (595, 85, 171),
}
MAPA_SOURCE_SENTENCES = 3901

# --downsample shortcuts
NAMED_SPLITS = {
    "mapa": REFERENCE_SIZES["ner-maltese"][:2],
    "mlrs": REFERENCE_SIZES["sa-maltese"][:2],
}


class SplitError(ValueError):
    pass


@dataclass(frozen=True)
class SplitSpec:
    train_size: int
    valid_size: int
    seed: int = DEFAULT_SEED

    @property
    def total(self):
        return self.train_size + self.valid_size


def parse_split(value, seed=DEFAULT_SEED):
    """
    "155,43" -> SplitSpec(155, 43); also accepts a NAMED_SPLITS key.
    """
    if value in NAMED_SPLITS:
        train, valid = NAMED_SPLITS[value]
        return SplitSpec(train, valid, seed)
    try:
        train, valid = (int(part) for part in value.split(","))
    except ValueError:
        raise SplitError(f"expected TRAIN,VALID counts or one of {', '.join(NAMED_SPLITS)}, got {value!r}")
    return SplitSpec(train, valid, seed)


def downsample(records, spec):
    """
    Uniform sampling without replacement from a seeded generator. The first
    train_size sampled records form the training split, the next valid_size
    the validation split; each split keeps the original corpus order.
    """
    records = list(records)
    if spec.train_size < 0 or spec.valid_size < 0:
        raise SplitError(f"split sizes must be non-negative, got {spec.train_size},{spec.valid_size}")
    if spec.total > len(records):
        raise SplitError(
            f"cannot draw {spec.train_size}+{spec.valid_size} records from a corpus of {len(records)}"
        )

    picked = pd.Series(range(len(records))).sample(n=spec.total, random_state=spec.seed).tolist()
    train_idx = sorted(picked[:spec.train_size])
    valid_idx = sorted(picked[spec.train_size:])
    logger.info(
        "Downsampled %d records to %d train + %d valid (seed %d)",
        len(records), len(train_idx), len(valid_idx), spec.seed,
    )
    return [records[i] for i in train_idx], [records[i] for i in valid_idx]
