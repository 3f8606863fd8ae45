//! Finitely presented commutative monoids.
//!
//! Elements are exponent vectors over the generators; a presentation is a
//! list of relation pairs. The word problem is decided by orienting the
//! relations along the graded-lexicographic order and closing under
//! critical pairs. The order is total and translation-invariant, so every
//! oriented rule strictly decreases and rewriting terminates; when the
//! critical-pair closure finishes, normal forms are unique and equality
//! is nf(v) = nf(w).

use crate::backend::MonoidBackend;
use crate::decision::Decision;
use crate::error::{Error, Result};
use std::cmp::Ordering;

pub const DEFAULT_COMPLETION_CAP: usize = 10_000;

/// A word over the generators: one exponent per generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpVec(pub Vec<u32>);

impl ExpVec {
    pub fn zero(len: usize) -> Self {
        ExpVec(vec![0; len])
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = vec![0; len];
        v[index] = 1;
        ExpVec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &ExpVec) -> ExpVec {
        debug_assert_eq!(self.len(), other.len());
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, if this vector dominates the other.
    pub fn checked_sub(&self, other: &ExpVec) -> Option<ExpVec> {
        let mut out = Vec::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(ExpVec(out))
    }

    pub fn divides(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum: the smallest common multiple of two words.
    pub fn join(&self, other: &ExpVec) -> ExpVec {
        ExpVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Graded-lexicographic comparison: total degree first, then the
    /// leftmost differing exponent.
    pub fn grlex(&self, other: &ExpVec) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }

    /// Render against generator names, e.g. `2*g + h`, with `0` for the
    /// empty word.
    pub fn render(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                e => parts.push(format!("{e}*{}", names[i])),
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generator_names: Vec<String>,
    pub relations: Vec<(ExpVec, ExpVec)>,
}

impl Presentation {
    pub fn new(generator_names: Vec<String>, relations: Vec<(ExpVec, ExpVec)>) -> Result<Self> {
        let n = generator_names.len();
        for (i, (l, r)) in relations.iter().enumerate() {
            if l.len() != n || r.len() != n {
                return Err(Error::Precondition(format!(
                    "relation {i} is not sized to {n} generators"
                )));
            }
        }
        Ok(Presentation {
            generator_names,
            relations,
        })
    }

    /// The free commutative monoid on the given generators.
    pub fn free(generator_names: Vec<String>) -> Self {
        Presentation {
            generator_names,
            relations: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.generator_names.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompletionStatus {
    Complete,
    Capped { iterations: usize },
}

/// An oriented, interreduced rewriting system for a presentation.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    pub generator_names: Vec<String>,
    pub rules: Vec<(ExpVec, ExpVec)>,
    pub status: CompletionStatus,
}

fn orient(l: ExpVec, r: ExpVec) -> Option<(ExpVec, ExpVec)> {
    match l.grlex(&r) {
        Ordering::Greater => Some((l, r)),
        Ordering::Less => Some((r, l)),
        Ordering::Equal => None, // identical sides carry no information
    }
}

fn reduce_once(rules: &[(ExpVec, ExpVec)], w: &ExpVec) -> Option<ExpVec> {
    for (l, r) in rules {
        if let Some(rest) = w.checked_sub(l) {
            return Some(rest.add(r));
        }
    }
    None
}

fn reduce_full(rules: &[(ExpVec, ExpVec)], w: &ExpVec) -> ExpVec {
    let mut current = w.clone();
    while let Some(next) = reduce_once(rules, &current) {
        current = next;
    }
    current
}

fn sort_rules(rules: &mut Vec<(ExpVec, ExpVec)>) {
    rules.sort_by(|a, b| a.0.grlex(&b.0).then_with(|| a.1.grlex(&b.1)));
    rules.dedup();
}

/// Interreduce: normalize right-hand sides and drop rules whose left-hand
/// side is reducible by another rule.
fn interreduce(rules: &mut Vec<(ExpVec, ExpVec)>) {
    loop {
        sort_rules(rules);
        let snapshot = rules.clone();
        let mut next: Vec<(ExpVec, ExpVec)> = Vec::with_capacity(snapshot.len());
        let mut changed = false;
        for (i, (l, r)) in snapshot.iter().enumerate() {
            let others: Vec<(ExpVec, ExpVec)> = snapshot
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, rule)| rule.clone())
                .collect();
            if reduce_once(&others, l).is_some() && reduce_full(&others, l) == reduce_full(&others, r)
            {
                changed = true;
                continue; // subsumed
            }
            let nr = reduce_full(&others, r);
            if nr != *r {
                changed = true;
            }
            match orient(l.clone(), nr) {
                Some(rule) => next.push(rule),
                None => changed = true,
            }
        }
        *rules = next;
        if !changed {
            sort_rules(rules);
            return;
        }
    }
}

/// Orient the relations, close under critical pairs, interreduce.
///
/// Overlaps of two left-hand sides are taken at their componentwise
/// maximum; disjoint redexes commute and are skipped. The rule count is
/// capped; a capped system still rewrites soundly but offers only
/// sound-but-incomplete equality.
pub fn complete(p: &Presentation, max_rules: usize) -> RewriteSystem {
    let mut rules: Vec<(ExpVec, ExpVec)> = p
        .relations
        .iter()
        .filter_map(|(l, r)| orient(l.clone(), r.clone()))
        .collect();
    interreduce(&mut rules);
    let mut iterations = 0usize;
    loop {
        iterations += 1;
        let mut new_rules: Vec<(ExpVec, ExpVec)> = Vec::new();
        'pairs: for i in 0..rules.len() {
            for j in i..rules.len() {
                let (li, ri) = &rules[i];
                let (lj, rj) = &rules[j];
                let overlap = li.join(lj);
                if overlap == li.add(lj) {
                    continue; // disjoint redexes commute
                }
                let red_i = overlap.checked_sub(li).unwrap().add(ri);
                let red_j = overlap.checked_sub(lj).unwrap().add(rj);
                let ni = reduce_full(&rules, &red_i);
                let nj = reduce_full(&rules, &red_j);
                if ni != nj {
                    if let Some(rule) = orient(ni, nj) {
                        new_rules.push(rule);
                        if rules.len() + new_rules.len() > max_rules {
                            break 'pairs;
                        }
                    }
                }
            }
        }
        if new_rules.is_empty() {
            return RewriteSystem {
                generator_names: p.generator_names.clone(),
                rules,
                status: CompletionStatus::Complete,
            };
        }
        rules.extend(new_rules);
        interreduce(&mut rules);
        if rules.len() > max_rules {
            return RewriteSystem {
                generator_names: p.generator_names.clone(),
                rules,
                status: CompletionStatus::Capped { iterations },
            };
        }
    }
}

impl RewriteSystem {
    pub fn is_complete(&self) -> bool {
        self.status == CompletionStatus::Complete
    }

    /// Unique irreducible descendant. Requires a complete system.
    pub fn normal_form(&self, w: &ExpVec) -> Result<ExpVec> {
        if !self.is_complete() {
            return Err(Error::CappedSystem);
        }
        Ok(reduce_full(&self.rules, w))
    }

    /// Reduction without the completeness guarantee, for capped systems.
    pub fn reduce(&self, w: &ExpVec) -> ExpVec {
        reduce_full(&self.rules, w)
    }

    /// Word equality. On complete systems this is exact; on capped ones a
    /// common reduct answers True and anything else stays Unknown.
    pub fn try_eq(&self, v: &ExpVec, w: &ExpVec, bound: u32) -> Decision {
        let rv = reduce_full(&self.rules, v);
        let rw = reduce_full(&self.rules, w);
        if rv == rw {
            return Decision::True;
        }
        if self.is_complete() {
            Decision::False
        } else {
            Decision::Unknown { bound }
        }
    }

    /// Post-hoc confluence audit: every genuine overlap of two left-hand
    /// sides joins to a common reduct.
    pub fn critical_pairs_join(&self) -> bool {
        for i in 0..self.rules.len() {
            for j in i..self.rules.len() {
                let (li, ri) = &self.rules[i];
                let (lj, rj) = &self.rules[j];
                let overlap = li.join(lj);
                if overlap == li.add(lj) {
                    continue;
                }
                let a = reduce_full(&self.rules, &overlap.checked_sub(li).unwrap().add(ri));
                let b = reduce_full(&self.rules, &overlap.checked_sub(lj).unwrap().add(rj));
                if a != b {
                    return false;
                }
            }
        }
        true
    }
}

/// A presented monoid with a completed word problem, usable as a backend.
/// Elements are kept in normal form, so structural equality is semantic.
#[derive(Clone, Debug)]
pub struct PresentedMonoid {
    presentation: Presentation,
    system: RewriteSystem,
}

impl PresentedMonoid {
    /// Completes the presentation; refuses capped systems.
    pub fn new(presentation: Presentation) -> Result<Self> {
        Self::with_cap(presentation, DEFAULT_COMPLETION_CAP)
    }

    pub fn with_cap(presentation: Presentation, max_rules: usize) -> Result<Self> {
        let system = complete(&presentation, max_rules);
        if !system.is_complete() {
            return Err(Error::CappedSystem);
        }
        Ok(PresentedMonoid {
            presentation,
            system,
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.system
    }

    pub fn rank(&self) -> usize {
        self.presentation.rank()
    }

    pub fn nf(&self, w: &ExpVec) -> ExpVec {
        self.system.reduce(w)
    }

    pub fn generator(&self, index: usize) -> ExpVec {
        self.nf(&ExpVec::unit(self.rank(), index))
    }

    /// All words of total degree at most `bound`, in graded-lex order.
    pub fn words_up_to(&self, bound: u32) -> Vec<ExpVec> {
        fn rec(dim: usize, deg: u32, out: &mut Vec<Vec<u32>>) {
            if dim == 0 {
                if deg == 0 {
                    out.push(vec![]);
                }
                return;
            }
            for first in (0..=deg).rev() {
                let mut tails = Vec::new();
                rec(dim - 1, deg - first, &mut tails);
                for mut t in tails {
                    let mut v = vec![first];
                    v.append(&mut t);
                    out.push(v);
                }
            }
        }
        let mut raw = Vec::new();
        for deg in 0..=bound {
            let mut level = Vec::new();
            rec(self.rank(), deg, &mut level);
            level.sort();
            raw.extend(level);
        }
        raw.into_iter().map(ExpVec).collect()
    }
}

impl MonoidBackend for PresentedMonoid {
    type Elem = ExpVec;

    fn zero(&self) -> ExpVec {
        ExpVec::zero(self.rank())
    }

    fn add(&self, x: &ExpVec, y: &ExpVec) -> ExpVec {
        self.nf(&x.add(y))
    }

    fn eq(&self, x: &ExpVec, y: &ExpVec) -> bool {
        self.nf(x) == self.nf(y)
    }

    fn enumerate(&self, bound: u32) -> Vec<ExpVec> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for w in self.words_up_to(bound) {
            let n = self.nf(&w);
            if seen.insert(n.clone()) {
                out.push(n);
            }
        }
        out
    }

    fn is_complete(&self, _bound: u32) -> bool {
        false
    }

    fn display(&self, x: &ExpVec) -> String {
        x.render(&self.presentation.generator_names)
    }
}
