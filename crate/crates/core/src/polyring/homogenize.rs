use alloc::vec::Vec;

use super::{Polynomial, Ring, Term};
use crate::Error;

/// Homogenizes every polynomial with a fresh last variable `h`, which is the
/// smallest variable under both supported orderings.
pub fn homogenize(ring: &Ring, polys: &[Polynomial]) -> (Ring, Vec<Polynomial>) {
    let ext = Ring { nvars: ring.nvars + 1, homogenizing: true, ..*ring };
    let out = polys
        .iter()
        .map(|p| {
            let d = p.deg().max(0) as u32;
            Polynomial::from_terms(
                &ext,
                p.terms().iter().map(|t| {
                    let pad = u16::try_from(d - t.mono.deg()).expect("degree fits u16");
                    Term::new(t.mono.extend_by(pad), t.coeff)
                }),
            )
        })
        .collect();
    (ext, out)
}

/// Sets the homogenizing variable to one.
pub fn dehomogenize(ring: &Ring, polys: &[Polynomial]) -> Result<(Ring, Vec<Polynomial>), Error> {
    if !ring.homogenizing || ring.nvars == 0 {
        return Err(Error::NoHomogenizingVariable);
    }
    let base = Ring { nvars: ring.nvars - 1, homogenizing: false, ..*ring };
    let out = polys
        .iter()
        .map(|p| {
            Polynomial::from_terms(&base, p.terms().iter().map(|t| Term::new(t.mono.drop_last(), t.coeff)))
        })
        .collect();
    Ok((base, out))
}
