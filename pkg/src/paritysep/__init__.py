"""Partitions with parts separated by parity: classes, injections, verification."""

from .partition import (
    EMPTY,
    Partition,
    PartitionStats,
    format_partition,
    make_partition,
    msdiff,
    msunion,
    parse_partition,
    render_ferrers,
    stats,
)
from .classes import (
    ALL_CLASS_IDS,
    ClassSpec,
    count_class,
    count_sequence,
    enumerate_all,
    enumerate_class,
    is_member,
    parse_class,
    partition_count,
)
from .maps import (
    MAPS,
    CaseTrace,
    DomainError,
    ImageWitness,
    NotInImageError,
    apply,
    excess_witnesses,
    image_membership,
    invert,
)
from .verify import VerificationReport, run_suite

__version__ = "0.1.0"
