#![allow(dead_code)]

pub mod golden;
pub mod oracle;

use rrs_core::Model;

/// Copies a library model into the oracle's plain representation.
pub fn to_raw(m: &Model) -> oracle::Raw {
    let n = m.size();
    let table = |f: &dyn Fn(usize, usize) -> usize| (0..n * n).map(|c| f(c / n, c % n) as u8).collect::<Vec<u8>>();
    oracle::Raw {
        n,
        unit: m.unit(),
        zero: m.zero(),
        mul: table(&|x, y| m.mul(x, y)),
        arrow: table(&|x, y| m.arrow(x, y)),
        rel: (0..n * n).map(|c| m.rel(c / n, c % n)).collect(),
        join: m.join_table().map(|j| j.bytes().to_vec()),
    }
}
