//! Deterministic enumeration of entry tuples for the identity checkers.
//!
//! All strategies produce tuples in a fixed lexicographic order (leftmost
//! slot slowest), so "first witness" is well defined and reproducible.

use crate::error::NambuError;
use crate::scalar::Polynomial;

/// How a checker enumerates entry tuples.
///
/// * `Coordinates`: ordered tuples of pairwise distinct coordinate
///   functions (empty when the tuple is longer than the dimension).
/// * `CoordinatesWithRepeat`: the full odometer over coordinate functions,
///   repeats allowed.
/// * `CoordinatesPlusProducts`: distinct-coordinate tuples, plus tuples
///   whose designated slot holds a monomial of total degree
///   `2..=max_product_degree` (the remaining coordinate slots stay
///   pairwise distinct).  Slot values are ordered coordinates first, then
///   products by (degree, exponents with earlier variables first).
/// * `ExplicitTuples`: a caller-provided list, checked for shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerationStrategy {
    Coordinates,
    CoordinatesWithRepeat,
    CoordinatesPlusProducts { max_product_degree: u32 },
    ExplicitTuples(Vec<Vec<Polynomial>>),
}

impl EnumerationStrategy {
    /// The products strategy with the default degree bound 2.
    pub fn products() -> Self {
        EnumerationStrategy::CoordinatesPlusProducts {
            max_product_degree: 2,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            EnumerationStrategy::Coordinates => "coordinates".into(),
            EnumerationStrategy::CoordinatesWithRepeat => "coordinates-with-repeat".into(),
            EnumerationStrategy::CoordinatesPlusProducts { max_product_degree } => {
                format!("coordinates-plus-products (degree <= {max_product_degree})")
            }
            EnumerationStrategy::ExplicitTuples(ts) => format!("{} explicit tuples", ts.len()),
        }
    }

    /// All entry tuples of length `len` over dimension `dim`.
    /// `product_slot` (0-based) receives the product monomials under the
    /// products strategy; `None` defaults to the last slot.
    pub fn tuples(
        &self,
        dim: usize,
        len: usize,
        product_slot: Option<usize>,
    ) -> Result<Vec<Vec<Polynomial>>, NambuError> {
        match self {
            EnumerationStrategy::ExplicitTuples(ts) => {
                for t in ts {
                    if t.len() != len {
                        return Err(NambuError::ArityMismatch {
                            context: "explicit tuple",
                            expected: len,
                            found: t.len(),
                        });
                    }
                    for e in t {
                        NambuError::check_dim(dim, e.dim())?;
                    }
                }
                Ok(ts.clone())
            }
            EnumerationStrategy::Coordinates => odometer(dim, len, None, &[], true),
            EnumerationStrategy::CoordinatesWithRepeat => odometer(dim, len, None, &[], false),
            EnumerationStrategy::CoordinatesPlusProducts { max_product_degree } => {
                let slot = product_slot.unwrap_or(len.saturating_sub(1));
                let products = product_monomials(dim, *max_product_degree);
                odometer(dim, len, Some(slot.min(len.saturating_sub(1))), &products, true)
            }
        }
    }
}

/// Monomials of total degree `2..=max`, ordered by degree, then with
/// earlier variables preferred (x1^2, x1*x2, ..., x2^2, x2*x3, ...).
pub fn product_monomials(dim: usize, max: u32) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for deg in 2..=max {
        let mut exps = vec![0u32; dim];
        push_compositions(dim, deg, 0, &mut exps, &mut out);
    }
    out
}

fn push_compositions(
    dim: usize,
    remaining: u32,
    slot: usize,
    exps: &mut Vec<u32>,
    out: &mut Vec<Polynomial>,
) {
    if slot + 1 == dim {
        exps[slot] = remaining;
        out.push(
            Polynomial::monomial(dim, exps.clone(), crate::scalar::rat(1, 1))
                .expect("valid monomial"),
        );
        exps[slot] = 0;
        return;
    }
    for take in (0..=remaining).rev() {
        exps[slot] = take;
        push_compositions(dim, remaining - take, slot + 1, exps, out);
    }
    exps[slot] = 0;
}

/// The shared odometer.  Each slot iterates over coordinates `x1..xd`;
/// the designated product slot (if any) additionally iterates over
/// `products` after the coordinates.  When `distinct` is set, slots that
/// hold coordinates must be pairwise distinct.
fn odometer(
    dim: usize,
    len: usize,
    product_slot: Option<usize>,
    products: &[Polynomial],
    distinct: bool,
) -> Result<Vec<Vec<Polynomial>>, NambuError> {
    let coords: Vec<Polynomial> = (1..=dim)
        .map(|i| Polynomial::var(dim, i))
        .collect::<Result<Vec<_>, _>>()?;
    if len == 0 {
        return Ok(vec![Vec::new()]);
    }
    let mut out = Vec::new();
    // state[i] = value index in slot i's value list
    let slot_len = |i: usize| {
        dim + if Some(i) == product_slot { products.len() } else { 0 }
    };
    let mut state = vec![0usize; len];
    loop {
        // Distinctness over coordinate-valued slots.
        let ok = !distinct || {
            let mut seen = 0u128;
            let mut good = true;
            for &v in &state {
                if v < dim {
                    let bit = 1u128 << v;
                    if seen & bit != 0 {
                        good = false;
                        break;
                    }
                    seen |= bit;
                }
            }
            good
        };
        if ok {
            let tuple: Vec<Polynomial> = state
                .iter()
                .map(|&v| {
                    if v < dim {
                        coords[v].clone()
                    } else {
                        products[v - dim].clone()
                    }
                })
                .collect();
            out.push(tuple);
        }
        // Advance the odometer, rightmost slot fastest.
        let mut slot = len;
        loop {
            if slot == 0 {
                return Ok(out);
            }
            slot -= 1;
            state[slot] += 1;
            if state[slot] < slot_len(slot) {
                break;
            }
            state[slot] = 0;
        }
    }
}

/// The tuple-enumerating identities, named after their CLI spellings.
/// Picks tuple lengths, designated product slots and default strategies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityKind {
    Fi,
    WeightedFi,
    Fai,
    WeightedFai,
    Fahi,
    WeightedFahi,
    ScaledFai,
    Gpi,
    WeightedGpi,
    Mgpi,
    Gapi,
    WeightedGapi,
    Mgapi,
}

impl IdentityKind {
    /// Entry tuple length for bracket arity `n`.
    pub fn tuple_len(&self, n: usize) -> usize {
        use IdentityKind::*;
        match self {
            Fi | WeightedFi | Gpi | WeightedGpi | Mgpi => 2 * n - 1,
            Fai | WeightedFai | Fahi | WeightedFahi | ScaledFai | Gapi | WeightedGapi | Mgapi => {
                2 * n
            }
        }
    }

    /// 0-based designated slot for product monomials, if the identity has
    /// a natural one.
    pub fn product_slot(&self, n: usize) -> Option<usize> {
        use IdentityKind::*;
        match self {
            Fi | WeightedFi if n >= 2 => Some(n - 2),
            Gpi | WeightedGpi | Mgpi => Some(2 * n - 2),
            _ => None,
        }
    }

    pub fn default_strategy(&self) -> EnumerationStrategy {
        use IdentityKind::*;
        match self {
            Fi | WeightedFi | Gpi | WeightedGpi | Mgpi => EnumerationStrategy::products(),
            Fai | WeightedFai | Gapi | WeightedGapi | Mgapi => EnumerationStrategy::Coordinates,
            Fahi | WeightedFahi | ScaledFai => EnumerationStrategy::CoordinatesWithRepeat,
        }
    }

    /// Whether the enumerated tuples are filtered down to those with at
    /// least two equal entries (the linearly dependent coordinate tuples).
    pub fn requires_repeated_entry(&self) -> bool {
        matches!(self, IdentityKind::Fahi | IdentityKind::WeightedFahi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distinct_coordinate_tuples() {
        let t = EnumerationStrategy::Coordinates.tuples(3, 2, None).unwrap();
        assert_eq!(t.len(), 6);
        assert_eq!(t[0], vec![
            Polynomial::var(3, 1).unwrap(),
            Polynomial::var(3, 2).unwrap()
        ]);
        // Too long for the dimension: empty enumeration.
        assert!(EnumerationStrategy::Coordinates.tuples(2, 3, None).unwrap().is_empty());
    }

    #[test]
    fn repeats_cover_the_full_odometer() {
        let t = EnumerationStrategy::CoordinatesWithRepeat
            .tuples(3, 2, None)
            .unwrap();
        assert_eq!(t.len(), 9);
        assert_eq!(t[0][0], t[0][1]);
    }

    #[test]
    fn product_monomial_order() {
        let p = product_monomials(3, 2);
        let strings: Vec<String> = p.iter().map(|m| m.to_string()).collect();
        assert_eq!(strings, vec!["x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"]);
        assert_eq!(product_monomials(6, 2).len(), 21);
        assert_eq!(product_monomials(3, 1).len(), 0);
    }

    #[test]
    fn products_go_into_the_designated_slot() {
        let t = EnumerationStrategy::products().tuples(2, 2, Some(1)).unwrap();
        // distinct coordinate pairs plus products in slot 1, with the
        // rightmost slot advancing fastest: (x1,x2), (x1,x1^2), ...
        assert_eq!(t.len(), 2 + 2 * 3);
        assert_eq!(t[0], vec![
            Polynomial::var(2, 1).unwrap(),
            Polynomial::var(2, 2).unwrap()
        ]);
        assert_eq!(t[1][1].to_string(), "x1^2");
        assert_eq!(t[4], vec![
            Polynomial::var(2, 2).unwrap(),
            Polynomial::var(2, 1).unwrap()
        ]);
        let with_product: Vec<_> = t
            .iter()
            .filter(|tuple| tuple[1].total_degree() == 2)
            .collect();
        assert_eq!(with_product.len(), 6);
    }

    #[test]
    fn explicit_tuples_are_validated() {
        let good = vec![vec![Polynomial::var(2, 1).unwrap()]];
        let s = EnumerationStrategy::ExplicitTuples(good.clone());
        assert_eq!(s.tuples(2, 1, None).unwrap(), good);
        assert!(s.tuples(2, 2, None).is_err());
    }

    #[test]
    fn kind_tables_are_consistent() {
        let n = 3;
        assert_eq!(IdentityKind::Fi.tuple_len(n), 5);
        assert_eq!(IdentityKind::Fi.product_slot(n), Some(1));
        assert_eq!(IdentityKind::Fai.tuple_len(n), 6);
        assert_eq!(IdentityKind::Fai.product_slot(n), None);
        assert_eq!(IdentityKind::Gpi.tuple_len(n), 5);
        assert_eq!(IdentityKind::Gpi.product_slot(n), Some(4));
        assert_eq!(IdentityKind::Mgapi.tuple_len(n), 6);
        assert!(IdentityKind::Fahi.requires_repeated_entry());
    }
}
