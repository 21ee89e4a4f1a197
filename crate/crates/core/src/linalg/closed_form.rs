//! Exact A_α spectra for graphs where they are known in closed form.

use super::Spectrum;
use crate::error::{check_alpha, Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum ClosedForm {
    /// `K_n`.
    Complete { n: usize },
    /// `l(K_n)`.
    LineOfComplete { n: usize },
    /// `l(K_{n,n})`.
    LineOfBalancedBipartite { n: usize },
    /// `l(K_{1,n−1})`, the star on `n` vertices.
    LineOfStar { n: usize },
    /// `l(G)` for an `r`-regular `G` with `n` vertices and `m` edges whose
    /// signless Laplacian eigenvalues are `q`.
    RegularLineFromQ {
        r: usize,
        n: usize,
        m: usize,
        q: Vec<f64>,
    },
}

fn invalid(family: &'static str, constraint: impl Into<String>) -> Error {
    Error::InvalidFamily {
        family,
        constraint: constraint.into(),
    }
}

impl ClosedForm {
    /// `(value, multiplicity)` pairs before merging.
    pub fn groups(&self, alpha: f64) -> Result<Vec<(f64, usize)>> {
        check_alpha(alpha)?;
        let a = alpha;
        Ok(match *self {
            ClosedForm::Complete { n } => {
                if n < 1 {
                    return Err(invalid("complete", "n >= 1"));
                }
                let nf = n as f64;
                vec![(nf - 1.0, 1), (a * nf - 1.0, n - 1)]
            }
            ClosedForm::LineOfComplete { n } => {
                if n < 3 {
                    return Err(invalid("line of complete", "n >= 3"));
                }
                let nf = n as f64;
                vec![
                    (2.0 * nf - 4.0, 1),
                    (nf * (a + 1.0) - 4.0, n - 1),
                    (2.0 * a * (nf - 1.0) - 2.0, n * (n - 3) / 2),
                ]
            }
            ClosedForm::LineOfBalancedBipartite { n } => {
                if n < 1 {
                    return Err(invalid("line of balanced bipartite", "n >= 1"));
                }
                let nf = n as f64;
                vec![
                    (2.0 * nf - 2.0, 1),
                    (nf * (a + 1.0) - 2.0, 2 * n - 2),
                    (2.0 * a * nf - 2.0, (n - 1) * (n - 1)),
                ]
            }
            ClosedForm::LineOfStar { n } => {
                if n < 2 {
                    return Err(invalid("line of star", "n >= 2"));
                }
                let nf = n as f64;
                vec![(nf - 2.0, 1), ((nf - 1.0) * a - 1.0, n - 2)]
            }
            ClosedForm::RegularLineFromQ { r, n, m, ref q } => {
                if r < 1 || 2 * m != r * n {
                    return Err(invalid("regular line from Q", "r >= 1 and 2m = r·n"));
                }
                if q.len() != n {
                    return Err(invalid(
                        "regular line from Q",
                        format!(
                            "expected {n} signless Laplacian eigenvalues, got {}",
                            q.len()
                        ),
                    ));
                }
                if m < n {
                    return Err(invalid("regular line from Q", "m >= n"));
                }
                let rf = r as f64;
                let mut out: Vec<(f64, usize)> = q
                    .iter()
                    .map(|&qi| (a * (2.0 * rf - qi) + qi - 2.0, 1))
                    .collect();
                out.push((2.0 * rf * a - 2.0, m - n));
                out
            }
        })
    }
}

/// Closed-form spectrum with coincident values merged and empty groups
/// dropped. Merging uses `1e−6 · max(1, max |value|)`.
pub fn closed_form_spectrum(kind: &ClosedForm, alpha: f64) -> Result<Spectrum> {
    let groups = kind.groups(alpha)?;
    let scale = groups
        .iter()
        .filter(|g| g.1 > 0)
        .map(|g| g.0.abs())
        .fold(1.0, f64::max);
    Ok(Spectrum::from_groups(&groups, 1e-6 * scale))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(groups: &[(f64, usize)], want: &[(f64, usize)]) -> bool {
        groups.len() == want.len()
            && groups
                .iter()
                .zip(want)
                .all(|(a, b)| a.1 == b.1 && (a.0 - b.0).abs() < 1e-12)
    }

    #[test]
    fn line_of_k4() {
        let a = 0.3;
        let s = closed_form_spectrum(&ClosedForm::LineOfComplete { n: 4 }, a).unwrap();
        assert!(approx(
            s.groups(),
            &[(4.0, 1), (4.0 * a, 3), (6.0 * a - 2.0, 2)]
        ));
    }

    #[test]
    fn line_of_k22() {
        let a = 0.25;
        let s = closed_form_spectrum(&ClosedForm::LineOfBalancedBipartite { n: 2 }, a).unwrap();
        assert!(approx(
            s.groups(),
            &[(2.0, 1), (2.0 * a, 2), (4.0 * a - 2.0, 1)]
        ));
    }

    #[test]
    fn line_of_star() {
        let a = 0.6;
        let s = closed_form_spectrum(&ClosedForm::LineOfStar { n: 5 }, a).unwrap();
        assert!(approx(s.groups(), &[(3.0, 1), (4.0 * a - 1.0, 3)]));
    }

    #[test]
    fn coincident_values_merge() {
        // l(K_4) at α = 1: everything equals 4.
        let s = closed_form_spectrum(&ClosedForm::LineOfComplete { n: 4 }, 1.0).unwrap();
        assert_eq!(s.groups(), &[(4.0, 6)]);
        // l(K_3) = K_3 has no third group.
        let s = closed_form_spectrum(&ClosedForm::LineOfComplete { n: 3 }, 0.0).unwrap();
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn multiplicities_sum_to_order() {
        for n in 3..20 {
            let s = closed_form_spectrum(&ClosedForm::LineOfComplete { n }, 0.4).unwrap();
            assert_eq!(s.len(), n * (n - 1) / 2);
            let s = closed_form_spectrum(&ClosedForm::LineOfBalancedBipartite { n }, 0.4).unwrap();
            assert_eq!(s.len(), n * n);
        }
    }

    #[test]
    fn regular_from_q_of_cycle() {
        // C_4: Q eigenvalues 4, 2, 2, 0; l(C_4) = C_4.
        let kind = ClosedForm::RegularLineFromQ {
            r: 2,
            n: 4,
            m: 4,
            q: vec![4.0, 2.0, 2.0, 0.0],
        };
        let s = closed_form_spectrum(&kind, 0.0).unwrap();
        assert!(approx(s.groups(), &[(2.0, 1), (0.0, 2), (-2.0, 1)]));
        let bad = ClosedForm::RegularLineFromQ {
            r: 2,
            n: 4,
            m: 5,
            q: vec![0.0; 4],
        };
        assert!(closed_form_spectrum(&bad, 0.0).is_err());
    }

    #[test]
    fn rejections() {
        assert!(closed_form_spectrum(&ClosedForm::LineOfComplete { n: 2 }, 0.1).is_err());
        assert!(closed_form_spectrum(&ClosedForm::Complete { n: 3 }, 1.5).is_err());
    }
}
