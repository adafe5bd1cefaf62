//! Census values frozen from the oracle before the enumerator was written.

/// (class, size, labeled, up to isomorphism), produced by the oracle before
/// the enumerator existed.
pub const GOLDEN: [(&str, usize, usize, usize); 18] = [
    ("rrs", 1, 1, 1),
    ("rrs", 2, 70, 35),
    ("rrs", 3, 549369, 91606),
    ("preordered-rrs", 1, 1, 1),
    ("preordered-rrs", 2, 66, 33),
    ("preordered-rrs", 3, 533061, 88884),
    ("antisym-rrs", 1, 1, 1),
    ("antisym-rrs", 2, 6, 3),
    ("antisym-rrs", 3, 1992, 336),
    ("rrs-with-0", 1, 1, 1),
    ("rrs-with-0", 2, 36, 18),
    ("rrs-with-0", 3, 367362, 61227),
    ("residuated-quasi-directoid", 1, 1, 1),
    ("residuated-quasi-directoid", 2, 66, 33),
    ("residuated-quasi-directoid", 3, 537681, 89654),
    ("pre-axioms-minus-g", 1, 1, 1),
    ("pre-axioms-minus-g", 2, 128, 64),
    ("pre-axioms-minus-g", 3, 7971615, 1328724),
];
