//! Affine automorphisms and isomorphisms of principal ideals `(f)` in `R[t]`
//! for `R` = Z, Q or F_p, with a brute-force oracle over prime fields.

pub mod autgroup;
pub mod cli;
pub mod error;
pub mod factor_fp;
pub mod oracle;
pub mod poly;
pub mod ring;
