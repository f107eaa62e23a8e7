//! Pálfy's condition, the two-clique classification of disconnected graphs,
//! and Pálfy's inequality on component sizes.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::graph::{connected_components, missing_edge, PrimeGraph};
use crate::{Error, Result};

/// Component sizes of a disconnected graph, normalized so that `a <= b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentPair {
    a: BigUint,
    b: BigUint,
}

impl ComponentPair {
    /// Normalizes `(x, y)` into `(min, max)`; both must be positive.
    pub fn new(x: BigUint, y: BigUint) -> Result<Self> {
        if x.is_zero() || y.is_zero() {
            return Err(Error::NonPositiveComponent);
        }
        Ok(if x <= y {
            Self { a: x, b: y }
        } else {
            Self { a: y, b: x }
        })
    }

    pub fn from_sizes(x: u64, y: u64) -> Result<Self> {
        Self::new(BigUint::from(x), BigUint::from(y))
    }

    pub fn smaller(&self) -> &BigUint {
        &self.a
    }

    pub fn larger(&self) -> &BigUint {
        &self.b
    }

    pub fn order(&self) -> BigUint {
        &self.a + &self.b
    }

    /// `b >= 2^a - 1`.
    pub fn satisfies_inequality(&self) -> bool {
        // b >= 2^a - 1  <=>  b + 1 >= 2^a  <=>  bit_length(b + 1) > a,
        // which stays exact without materializing 2^a for huge a.
        let bits = (&self.b + 1u32).bits();
        self.a < BigUint::from(bits)
    }
}

impl fmt::Display for ComponentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// Pálfy's inequality for component sizes in either order.
pub fn pair_satisfies_inequality(x: &BigUint, y: &BigUint) -> Result<bool> {
    Ok(ComponentPair::new(x.clone(), y.clone())?.satisfies_inequality())
}

/// Machine-width form of [`pair_satisfies_inequality`] for hot loops.
pub fn pair_satisfies_inequality_u64(x: u64, y: u64) -> Result<bool> {
    if x == 0 || y == 0 {
        return Err(Error::NonPositiveComponent);
    }
    let (a, b) = (x.min(y), x.max(y));
    if a >= 128 {
        return Ok(false);
    }
    Ok((1u128 << a) - 1 <= u128::from(b))
}

/// Three pairwise non-adjacent vertices, found by scanning every triple in
/// increasing order.
pub fn independent_triple(g: &PrimeGraph) -> Option<[u64; 3]> {
    let vs: Vec<u64> = g.vertices().iter().copied().collect();
    for (i, &p) in vs.iter().enumerate() {
        for (j, &q) in vs.iter().enumerate().skip(i + 1) {
            if g.has_edge(p, q) {
                continue;
            }
            for &r in &vs[j + 1..] {
                if !g.has_edge(p, r) && !g.has_edge(q, r) {
                    return Some([p, q, r]);
                }
            }
        }
    }
    None
}

/// Among any three vertices, at least two are adjacent.
pub fn satisfies_palfy_condition(g: &PrimeGraph) -> bool {
    independent_triple(g).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationReason {
    ThreeOrMoreComponents,
    ComponentNotComplete,
    IndependentTriple,
}

impl fmt::Display for ViolationReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::ThreeOrMoreComponents => "three_or_more_components",
            Self::ComponentNotComplete => "component_not_complete",
            Self::IndependentTriple => "independent_triple",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Empty,
    Connected,
    TwoCompleteComponents {
        pair: ComponentPair,
        inequality_holds: bool,
    },
    PalfyViolation {
        reason: ViolationReason,
        witness: BTreeSet<u64>,
    },
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Empty => "Empty",
            Self::Connected => "Connected",
            Self::TwoCompleteComponents { .. } => "TwoCompleteComponents",
            Self::PalfyViolation { .. } => "PalfyViolation",
        }
    }
}

/// Classifies a graph against the structure forced by Pálfy's condition.
///
/// Violations take precedence over everything else:
/// - three or more components: witness is the smallest prime of the first
///   three components, an independent triple;
/// - two components, one not complete: witness is a non-adjacent pair
///   inside that component;
/// - connected but containing an independent triple: witness is the triple.
///
/// Otherwise a disconnected graph is two cliques and reports its size pair
/// together with the inequality flag.
pub fn classify(g: &PrimeGraph) -> Classification {
    let decomposition = connected_components(g);
    let components = &decomposition.components;
    match components.len() {
        0 => Classification::Empty,
        1 => match independent_triple(g) {
            Some(triple) => Classification::PalfyViolation {
                reason: ViolationReason::IndependentTriple,
                witness: triple.into_iter().collect(),
            },
            None => Classification::Connected,
        },
        2 => {
            for component in components {
                if let Some((p, q)) = missing_edge(g, component) {
                    return Classification::PalfyViolation {
                        reason: ViolationReason::ComponentNotComplete,
                        witness: BTreeSet::from([p, q]),
                    };
                }
            }
            let pair =
                ComponentPair::from_sizes(components[0].len() as u64, components[1].len() as u64)
                    .expect("components are non-empty");
            let inequality_holds = pair.satisfies_inequality();
            Classification::TwoCompleteComponents {
                pair,
                inequality_holds,
            }
        }
        _ => Classification::PalfyViolation {
            reason: ViolationReason::ThreeOrMoreComponents,
            witness: components
                .iter()
                .take(3)
                .map(|c| *c.first().expect("components are non-empty"))
                .collect(),
        },
    }
}

/// `2^exponent` as a big integer.
pub(crate) fn pow2(exponent: u64) -> BigUint {
    BigUint::one() << exponent
}
