use rand::Rng;

use super::Graph;
use crate::error::{Error, Result};

/// Erdős–Rényi `G(n, p)`: each pair independently with probability `p`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, pairs)
}

/// Draws `G(n, p)` samples until one is connected, giving up after `max_tries`.
pub fn gnp_connected<R: Rng + ?Sized>(
    n: usize,
    p: f64,
    rng: &mut R,
    max_tries: usize,
) -> Result<Graph> {
    for _ in 0..max_tries {
        let g = gnp(n, p, rng)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::InvalidArgument(format!(
        "no connected G({n}, {p}) sample in {max_tries} tries"
    )))
}
