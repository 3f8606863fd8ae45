//! Amalgamated sums of presented monoids and the refinement step.
//!
//! The pushout of B <- A -> C is presented on the disjoint union of the
//! generators of B and C, with both relation sets plus one gluing
//! relation e(a) = f(a) per generator a of A. The refinement step glues a
//! free rank-4 monoid onto M along the pattern monoid of balanced
//! quadruples, which adjoins a refinement matrix for a given quadruple
//! while embedding M unitarily.

use crate::backend::MonoidBackend;
use crate::decision::Checked;
use crate::equations::RefinementMatrix;
use crate::error::{Error, Result};
use crate::finite::FiniteMonoid;
use crate::predicates;
use crate::presentation::{ExpVec, Presentation, PresentedMonoid};
use std::collections::HashSet;

/// Generators of the pattern monoid inside (Z+)^4: the two row patterns
/// followed by the two column patterns of a 2x2 matrix.
pub const PATTERN_GENERATORS: [[u64; 4]; 4] = [
    [1, 1, 0, 0],
    [0, 0, 1, 1],
    [1, 0, 1, 0],
    [0, 1, 0, 1],
];

/// Membership oracle for the pattern monoid: a vector is a sum of the
/// four patterns exactly when its outer entries balance its inner ones.
pub fn pattern_member(v: &[u64; 4]) -> bool {
    v[0] + v[3] == v[1] + v[2]
}

/// The pattern monoid as a presentation: four generators with the single
/// relation a0 + a1 = b0 + b1 (both sides map to the all-ones vector).
pub fn pattern_presentation() -> Presentation {
    Presentation::new(
        vec!["a0".into(), "a1".into(), "b0".into(), "b1".into()],
        vec![(ExpVec(vec![1, 1, 0, 0]), ExpVec(vec![0, 0, 1, 1]))],
    )
    .unwrap()
}

/// Exhaustive generator-combination search on a box: every vector in
/// [0, extent]^4 reachable as a sum of patterns.
pub fn pattern_reachable_in_box(extent: u64) -> HashSet<[u64; 4]> {
    let mut reached: HashSet<[u64; 4]> = HashSet::new();
    let mut frontier = vec![[0u64; 4]];
    while let Some(v) = frontier.pop() {
        if !reached.insert(v) {
            continue;
        }
        for g in &PATTERN_GENERATORS {
            let w = [v[0] + g[0], v[1] + g[1], v[2] + g[2], v[3] + g[3]];
            if w.iter().all(|&c| c <= extent) && !reached.contains(&w) {
                frontier.push(w);
            }
        }
    }
    reached
}

fn unique_names(base: &[String], taken: &mut HashSet<String>) -> Vec<String> {
    base.iter()
        .map(|name| {
            let mut candidate = name.clone();
            while !taken.insert(candidate.clone()) {
                candidate.push('\'');
            }
            candidate
        })
        .collect()
}

fn pad_left(word: &ExpVec, total: usize) -> ExpVec {
    let mut v = word.0.clone();
    v.resize(total, 0);
    ExpVec(v)
}

fn shift_right(word: &ExpVec, offset: usize, total: usize) -> ExpVec {
    let mut v = vec![0; total];
    for (i, &e) in word.0.iter().enumerate() {
        v[offset + i] = e;
    }
    ExpVec(v)
}

/// Amalgamated sum of B and C along a monoid A given by generator
/// images: `e_images[k]` is the word of B and `f_images[k]` the word of C
/// that the k-th generator of A maps to. B's generators come first in the
/// result.
pub fn pushout(
    b: &Presentation,
    c: &Presentation,
    e_images: &[ExpVec],
    f_images: &[ExpVec],
) -> Result<Presentation> {
    if e_images.len() != f_images.len() {
        return Err(Error::Precondition(format!(
            "{} images on one side, {} on the other",
            e_images.len(),
            f_images.len()
        )));
    }
    for (k, w) in e_images.iter().enumerate() {
        if w.len() != b.rank() {
            return Err(Error::Precondition(format!(
                "image {k} is not a word over the left factor"
            )));
        }
    }
    for (k, w) in f_images.iter().enumerate() {
        if w.len() != c.rank() {
            return Err(Error::Precondition(format!(
                "image {k} is not a word over the right factor"
            )));
        }
    }
    let total = b.rank() + c.rank();
    let mut taken = HashSet::new();
    let mut names = unique_names(&b.generator_names, &mut taken);
    names.extend(unique_names(&c.generator_names, &mut taken));
    let mut relations: Vec<(ExpVec, ExpVec)> = Vec::new();
    for (l, r) in &b.relations {
        relations.push((pad_left(l, total), pad_left(r, total)));
    }
    for (l, r) in &c.relations {
        relations.push((
            shift_right(l, b.rank(), total),
            shift_right(r, b.rank(), total),
        ));
    }
    for (e, f) in e_images.iter().zip(f_images) {
        relations.push((pad_left(e, total), shift_right(f, b.rank(), total)));
    }
    Presentation::new(names, relations)
}

/// A presentation of a table monoid: one generator per nonzero element,
/// with a relation g_x + g_y = word(x + y) for every pair.
pub fn to_presentation(m: &FiniteMonoid) -> Presentation {
    let n = m.size();
    let names: Vec<String> = (1..n).map(|x| m.label(x).to_string()).collect();
    let rank = n - 1;
    let word = |x: usize| -> ExpVec {
        if x == 0 {
            ExpVec::zero(rank)
        } else {
            ExpVec::unit(rank, x - 1)
        }
    };
    let mut relations = Vec::new();
    for x in 1..n {
        for y in x..n {
            relations.push((word(x).add(&word(y)), word(m.add_idx(x, y))));
        }
    }
    Presentation::new(names, relations).unwrap()
}

/// Outcome of adjoining a refinement matrix for (a0, a1, b0, b1).
pub enum RefinementStep {
    /// A zero among the inputs forces the matrix; no extension is built.
    Direct(RefinementMatrix<ExpVec>),
    /// The glued extension together with the four adjoined entries.
    Extended(Box<RefinementExtension>),
}

pub struct RefinementExtension {
    pub monoid: PresentedMonoid,
    /// Rank of the base monoid's presentation; its generators occupy the
    /// trailing indices of the extension.
    pub base_rank: usize,
    /// Normal forms of the four adjoined generators, row by row.
    pub adjoined: [ExpVec; 4],
    /// The instance being refined, embedded into the extension.
    pub instance: [ExpVec; 4],
}

impl RefinementExtension {
    /// A word of the base monoid, viewed inside the extension.
    pub fn embed(&self, w: &ExpVec) -> ExpVec {
        let total = self.monoid.rank();
        self.monoid.nf(&shift_right(w, total - self.base_rank, total))
    }

    pub fn matrix(&self) -> RefinementMatrix<ExpVec> {
        RefinementMatrix {
            c00: self.adjoined[0].clone(),
            c01: self.adjoined[1].clone(),
            c10: self.adjoined[2].clone(),
            c11: self.adjoined[3].clone(),
        }
    }

    /// Whether the adjoined entries refine the embedded instance.
    pub fn matrix_valid(&self) -> bool {
        let [a0, a1, b0, b1] = &self.instance;
        self.matrix().verify(&self.monoid, a0, a1, b0, b1)
    }

    /// Injectivity of the embedding on the base ball: distinct base
    /// elements have distinct normal forms in the extension.
    pub fn embedding_injective_on_ball(&self, base: &PresentedMonoid, bound: u32) -> bool {
        let ball = base.enumerate(bound);
        for (i, x) in ball.iter().enumerate() {
            for y in &ball[i + 1..] {
                if self.embed(x) == self.embed(y) {
                    return false;
                }
            }
        }
        true
    }

    /// Bounded check of the unitary condition for the embedded copy of
    /// the base: membership in the image is table-driven from a generous
    /// base ball.
    pub fn unitary_on_ball(&self, base: &PresentedMonoid, bound: u32) -> Result<Checked> {
        let image: HashSet<ExpVec> = base
            .enumerate(2 * bound + 2)
            .iter()
            .map(|w| self.embed(w))
            .collect();
        predicates::is_unitary_extension(&self.monoid, |x: &ExpVec| image.contains(x), bound)
    }

    /// Conicality on the ball: no two nonzero elements sum to zero.
    pub fn conical_on_ball(&self, bound: u32) -> bool {
        predicates::is_conical(&self.monoid, bound).decision.is_true()
    }
}

/// Adjoin a refinement matrix for a0 + a1 = b0 + b1 over a presented
/// base. Zero entries are solved directly; otherwise the free rank-4
/// monoid is glued onto the base along the pattern monoid, the two row
/// sums matching the a's and the two column sums the b's.
pub fn refinement_step(
    base: &PresentedMonoid,
    a0: &ExpVec,
    a1: &ExpVec,
    b0: &ExpVec,
    b1: &ExpVec,
) -> Result<RefinementStep> {
    if !base.eq(&a0.add(a1), &b0.add(b1)) {
        return Err(Error::Precondition(format!(
            "{} + {} != {} + {}",
            base.display(a0),
            base.display(a1),
            base.display(b0),
            base.display(b1)
        )));
    }
    let zero = base.zero();
    let direct = |m: RefinementMatrix<ExpVec>| Ok(RefinementStep::Direct(m));
    if base.eq(a0, &zero) {
        return direct(RefinementMatrix {
            c00: zero.clone(),
            c01: zero.clone(),
            c10: b0.clone(),
            c11: b1.clone(),
        });
    }
    if base.eq(a1, &zero) {
        return direct(RefinementMatrix {
            c00: b0.clone(),
            c01: b1.clone(),
            c10: zero.clone(),
            c11: zero.clone(),
        });
    }
    if base.eq(b0, &zero) {
        return direct(RefinementMatrix {
            c00: zero.clone(),
            c01: a0.clone(),
            c10: zero.clone(),
            c11: a1.clone(),
        });
    }
    if base.eq(b1, &zero) {
        return direct(RefinementMatrix {
            c00: a0.clone(),
            c01: zero.clone(),
            c10: a1.clone(),
            c11: zero.clone(),
        });
    }
    let free = Presentation::free(vec!["e0".into(), "e1".into(), "e2".into(), "e3".into()]);
    // the four pattern generators, read as words over e0..e3
    let e_images = vec![
        ExpVec(vec![1, 1, 0, 0]),
        ExpVec(vec![0, 0, 1, 1]),
        ExpVec(vec![1, 0, 1, 0]),
        ExpVec(vec![0, 1, 0, 1]),
    ];
    let f_images = vec![a0.clone(), a1.clone(), b0.clone(), b1.clone()];
    let glued = pushout(&free, base.presentation(), &e_images, &f_images)?;
    let monoid = PresentedMonoid::new(glued)?;
    let total = monoid.rank();
    let adjoined = [
        monoid.nf(&ExpVec::unit(total, 0)),
        monoid.nf(&ExpVec::unit(total, 1)),
        monoid.nf(&ExpVec::unit(total, 2)),
        monoid.nf(&ExpVec::unit(total, 3)),
    ];
    let base_rank = base.rank();
    let embed = |w: &ExpVec| monoid.nf(&shift_right(w, 4, total));
    let instance = [embed(a0), embed(a1), embed(b0), embed(b1)];
    let ext = RefinementExtension {
        monoid,
        base_rank,
        adjoined,
        instance,
    };
    if !ext.matrix_valid() {
        return Err(Error::Verification(
            "adjoined entries do not refine the instance".to_string(),
        ));
    }
    Ok(RefinementStep::Extended(Box::new(ext)))
}

/// The refinement step for a table monoid, through its presentation.
pub fn refinement_step_finite(
    m: &FiniteMonoid,
    a0: usize,
    a1: usize,
    b0: usize,
    b1: usize,
) -> Result<(PresentedMonoid, RefinementStep)> {
    let base = PresentedMonoid::new(to_presentation(m))?;
    let rank = base.rank();
    let word = |x: usize| -> ExpVec {
        if x == 0 {
            ExpVec::zero(rank)
        } else {
            ExpVec::unit(rank, x - 1)
        }
    };
    let step = refinement_step(&base, &word(a0), &word(a1), &word(b0), &word(b1))?;
    Ok((base, step))
}
