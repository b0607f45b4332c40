use crate::ideal::{enumerate_proper_ideals, Ideal, IdealFilter};
use crate::ring::Ring;

/// One (ring, ideal) pair of the sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub ring: Ring,
    pub ideal: Ideal,
    /// `√I` is maximal. Such instances are kept so emptiness claims can use
    /// them; every claim under the standing non-maximal assumption reports
    /// them as hypothesis-not-met.
    pub radical_maximal: bool,
}

impl Instance {
    pub fn new(ideal: Ideal) -> Self {
        Instance {
            ring: ideal.ring().clone(),
            radical_maximal: ideal.radical().is_maximal(),
            ideal,
        }
    }
}

/// Nondecreasing factor lists with `2..=5` factors, each at least 2, and
/// product at most `max_card`.
fn products(max_card: u64) -> Vec<Vec<u64>> {
    fn grow(prefix: &mut Vec<u64>, product: u64, max_card: u64, out: &mut Vec<Vec<u64>>) {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        if prefix.len() == 5 {
            return;
        }
        let start = prefix.last().copied().unwrap_or(2);
        for m in start..=max_card / product {
            prefix.push(m);
            grow(prefix, product * m, max_card, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), 1, max_card, &mut out);
    out
}

/// Every ring of the sweep: `Z_n` for `4 ≤ n ≤ max_card` and every product
/// of 2 to 5 cyclic factors (nondecreasing moduli) with at most `max_card`
/// elements. Ordered by cardinality, then factor count, then moduli.
pub fn universe_rings(max_card: u64) -> Vec<Ring> {
    let mut shapes: Vec<Vec<u64>> = (4..=max_card).map(|n| vec![n]).collect();
    shapes.extend(products(max_card));
    shapes.sort_by_key(|m| (m.iter().product::<u64>(), m.len(), m.clone()));
    shapes
        .into_iter()
        .map(|m| Ring::new(&m).expect("moduli are at least 2"))
        .collect()
}

/// Every proper ideal of every ring in [`universe_rings`], ideals in
/// divisor-tuple order.
pub fn default_universe(max_card: u64) -> Vec<Instance> {
    universe_rings(max_card)
        .iter()
        .flat_map(|r| enumerate_proper_ideals(r, IdealFilter::All))
        .map(Instance::new)
        .collect()
}
