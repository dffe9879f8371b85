//! Node-wise comparison of sampled fields.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::ScalarGrid;

/// Worst discrepancy between two grids over the compared nodes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CompareReport {
    pub max_abs: f64,
    pub max_rel: f64,
    /// Node of the largest absolute difference.
    pub argmax: Option<(usize, usize)>,
    pub compared: usize,
    pub masked: usize,
}

/// Compares `a` against the reference `b`; nodes for which `mask` returns `true` are skipped.
pub fn compare_grids(a: &ScalarGrid, b: &ScalarGrid, mask: Option<&(dyn Fn(usize, usize) -> bool + Sync)>) -> Result<CompareReport> {
    if a.spec() != b.spec() {
        return Err(Error::SpecMismatch);
    }
    let spec = *a.spec();
    let rows: Vec<Option<(f64, f64, usize)>> = (0..spec.len())
        .into_par_iter()
        .map(|k| {
            let (i, j) = spec.node(k);
            if mask.is_some_and(|m| m(i, j)) {
                return None;
            }
            let (va, vb) = (a.values()[k], b.values()[k]);
            let abs = (va - vb).norm();
            let rel = if vb.norm() > 0.0 { abs / vb.norm() } else { abs };
            Some((abs, rel, k))
        })
        .collect();
    let mut report = CompareReport { max_abs: 0.0, max_rel: 0.0, argmax: None, compared: 0, masked: 0 };
    for row in rows {
        match row {
            None => report.masked += 1,
            Some((abs, rel, k)) => {
                report.compared += 1;
                if abs > report.max_abs || report.argmax.is_none() {
                    report.max_abs = report.max_abs.max(abs);
                    report.argmax = Some(spec.node(k));
                }
                report.max_rel = report.max_rel.max(rel);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::real;
    use crate::grid::GridSpec;

    #[test]
    fn identical_grids() {
        let g = ScalarGrid::from_fn(GridSpec::square(-1.0, 1.0, 5).unwrap(), |z| z * z);
        let r = compare_grids(&g, &g, None).unwrap();
        assert_eq!((r.max_abs, r.max_rel, r.compared), (0.0, 0.0, 25));
    }

    #[test]
    fn constant_offset() {
        let g = ScalarGrid::from_fn(GridSpec::square(-1.0, 1.0, 4).unwrap(), |_| real(2.0));
        let h = g.map(|v| v + 1e-9);
        let r = compare_grids(&h, &g, None).unwrap();
        assert!((r.max_abs - 1e-9).abs() < 1e-15);
    }

    #[test]
    fn mask_and_argmax() {
        let spec = GridSpec::square(0.0, 1.0, 3).unwrap();
        let g = ScalarGrid::from_fn(spec, |_| real(1.0));
        let mut h = g.clone();
        h.set(2, 1, real(1.5));
        h.set(0, 0, real(9.0));
        let skip = |i: usize, j: usize| i == 0 && j == 0;
        let r = compare_grids(&h, &g, Some(&skip)).unwrap();
        assert_eq!(r.argmax, Some((2, 1)));
        assert_eq!(r.masked, 1);
        assert!((r.max_rel - 0.5).abs() < 1e-15);
    }

    #[test]
    fn mismatched_specs() {
        let a = ScalarGrid::from_fn(GridSpec::square(0.0, 1.0, 3).unwrap(), |z| z);
        let b = ScalarGrid::from_fn(GridSpec::square(0.0, 1.0, 4).unwrap(), |z| z);
        assert!(matches!(compare_grids(&a, &b, None), Err(Error::SpecMismatch)));
    }
}
