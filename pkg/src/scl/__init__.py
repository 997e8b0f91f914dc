"""Strong shortcuts and isometric loops in Cayley graphs of F(a,b) x F(c,d)."""
from .cayley import CycleReport, DistanceOracle, canonical_cycle, enumerate_isometric_cycles
from .errors import (
    CapExceeded,
    IndexOutOfRange,
    InvalidSpec,
    MalformedCount,
    NotNull,
    OddLength,
    RadiusExhausted,
    SclError,
    UnknownGenerator,
)
from .families import FamilySpec, u_family, u_k, verify_claim_identities, w_n, z2_distance_table
from .group import (
    IDENTITY,
    STD,
    TWISTED,
    MarkedAlphabet,
    NormalForm,
    apply_automorphism,
    check_relators,
    evaluate,
    inverse,
    multiply,
)
from .shortcut_free import cancellation_tree, centroid, split_null_word
from .shortcut_product import ShortcutCertificate, shortcut, verify_certificate
from .words import (
    Letter,
    Word,
    cyclic_conjugate,
    format_word,
    free_reduce,
    invert_word,
    parse_word,
    random_null_word,
)

__version__ = "0.1.0"
