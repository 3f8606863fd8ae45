//! Multiplicative sets of integers used by the torsion predicates.

use crate::error::{Error, Result};

/// A multiplicative subsemigroup of the positive integers, given by a
/// non-empty set of generators, all at least 2. The set itself is the
/// closure of the generators under products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PSet {
    generators: Vec<u32>,
}

impl PSet {
    pub fn new(mut generators: Vec<u32>) -> Result<Self> {
        generators.sort_unstable();
        generators.dedup();
        if generators.is_empty() {
            return Err(Error::Precondition(
                "a multiplicative set needs at least one generator".to_string(),
            ));
        }
        if let Some(&g) = generators.iter().find(|&&g| g < 2) {
            return Err(Error::Precondition(format!(
                "multiplicative-set generator {g} is below 2"
            )));
        }
        Ok(PSet { generators })
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    /// All members of the set with value at most `max`, ascending.
    pub fn members_up_to(&self, max: u64) -> Vec<u64> {
        let mut seen = std::collections::BTreeSet::new();
        let mut frontier: Vec<u64> = self
            .generators
            .iter()
            .map(|&g| g as u64)
            .filter(|&g| g <= max)
            .collect();
        while let Some(p) = frontier.pop() {
            if !seen.insert(p) {
                continue;
            }
            for &g in &self.generators {
                let q = p.saturating_mul(g as u64);
                if q <= max && !seen.contains(&q) {
                    frontier.push(q);
                }
            }
        }
        seen.into_iter().collect()
    }
}

impl std::fmt::Display for PSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", parts.join(","))
    }
}
