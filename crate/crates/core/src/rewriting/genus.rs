//! Commutator length in SL(2,Z)′, searched in Z₂ ∗ Z₃.
//!
//! `m = [x, y]` in SL(2,Z) exactly when its projection is a commutator in
//! Z₂ ∗ Z₃: any solution downstairs lifts, and the projection is injective on
//! commutator subgroups. All searches therefore run on reduced Z₂ ∗ Z₃ words
//! and only the final witnesses are lifted to matrices.
//!
//! For a fixed `x`, the equation `w = [x, y]` is `y x⁻¹ y⁻¹ = x⁻¹ w`, which has
//! a solution iff `x⁻¹ w` is conjugate to `x⁻¹`; conjugacy in a free product
//! is decided exactly by cyclic reduction. Genus 1 is decided by trying every
//! `x` up to `|w₀| + 2` syllables, where `w₀` is the cyclic reduction of `w`.
//! Higher genus is a budgeted iterative-deepening search that reports
//! "inconclusive" when it cannot settle the question.

use std::ops::ControlFlow;

use super::free_basis::rewrite_in_free_basis;
use super::witness::{commutator_witness, CommutatorWitness};
use crate::error::{Error, Result};
use crate::gl2z::{alpha_project, Mat2, PslSyllable, PslWord};
use crate::invariants::in_derived_sl;

/// Default cap on search nodes per genus.
pub const DEFAULT_GENUS_BUDGET: u64 = 1_000_000;

/// Extra syllables allowed beyond the cyclic length in the genus-1 search.
const GENUS_ONE_SLACK: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenusOutcome {
    /// The minimal genus together with a witness of that length.
    Found {
        genus: usize,
        witness: CommutatorWitness,
    },
    /// Every genus up to `g_max` was ruled out.
    ExceedsMax { g_max: usize },
    /// The search could not rule out `lower_bound`; `upper_bound` is the
    /// length of the free-basis witness.
    Inconclusive {
        lower_bound: usize,
        upper_bound: usize,
    },
}

struct Budget {
    remaining: u64,
}

impl Budget {
    fn tick(&mut self) -> ControlFlow<()> {
        if self.remaining == 0 {
            return ControlFlow::Break(());
        }
        self.remaining -= 1;
        ControlFlow::Continue(())
    }
}

/// Visits every reduced word of exactly `len` syllables in lexicographic order.
fn for_each_word<T>(len: usize, mut f: impl FnMut(&PslWord) -> ControlFlow<T>) -> Option<T> {
    fn go<T>(
        prefix: &mut Vec<PslSyllable>,
        remaining: usize,
        f: &mut impl FnMut(&PslWord) -> ControlFlow<T>,
    ) -> ControlFlow<T> {
        if remaining == 0 {
            let w = PslWord::from_reduced(prefix.clone()).expect("alternating by construction");
            return f(&w);
        }
        for s in PslSyllable::ALL {
            if prefix.last().is_some_and(|l| l.same_factor(s)) {
                continue;
            }
            prefix.push(s);
            let flow = go(prefix, remaining - 1, f);
            prefix.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
    match go(&mut Vec::with_capacity(len), len, &mut f) {
        ControlFlow::Break(t) => Some(t),
        ControlFlow::Continue(()) => None,
    }
}

enum Search<T> {
    Found(T),
    NotFound,
    OutOfBudget,
}

/// Genus-1 search on a Z₂ ∗ Z₃ word: the least `x` (shortlex) admitting a `y`.
fn solve_commutator(w: &PslWord, budget: &mut Budget) -> Search<(PslWord, PslWord)> {
    let (g, core) = w.cyclic_reduction();
    if core.is_empty() {
        return Search::Found((PslWord::identity(), PslWord::identity()));
    }
    let max_len = core.len() + GENUS_ONE_SLACK;
    for len in 0..=max_len {
        let hit = for_each_word(len, |x| {
            if budget.tick().is_break() {
                return ControlFlow::Break(None);
            }
            let x_inv = x.inverse();
            match x_inv.conjugator_to(&x_inv.multiply(&core)) {
                Some(y) => ControlFlow::Break(Some((x.clone(), y))),
                None => ControlFlow::Continue(()),
            }
        });
        match hit {
            Some(Some((x, y))) => {
                let g_inv = g.inverse();
                let conj = |u: &PslWord| g.multiply(u).multiply(&g_inv);
                return Search::Found((conj(&x), conj(&y)));
            }
            Some(None) => return Search::OutOfBudget,
            None => {}
        }
    }
    Search::NotFound
}

/// Product of `genus` commutators, with the outer pairs bounded by `max_len`.
fn solve_product(
    w: &PslWord,
    genus: usize,
    max_len: usize,
    budget: &mut Budget,
) -> Search<Vec<(PslWord, PslWord)>> {
    if genus == 0 {
        return if w.is_empty() {
            Search::Found(Vec::new())
        } else {
            Search::NotFound
        };
    }
    if genus == 1 {
        return match solve_commutator(w, budget) {
            Search::Found(pair) => Search::Found(vec![pair]),
            Search::NotFound => Search::NotFound,
            Search::OutOfBudget => Search::OutOfBudget,
        };
    }
    // Pairs with a trivial entry are trivial commutators, so lengths start at 1.
    let ball: Vec<PslWord> = (1..=max_len).flat_map(PslWord::enumerate_length).collect();
    for level in 1..=max_len {
        for x in ball.iter().take_while(|x| x.len() <= level) {
            for y in ball.iter().take_while(|y| y.len() <= level) {
                if x.len() < level && y.len() < level {
                    continue;
                }
                if budget.tick().is_break() {
                    return Search::OutOfBudget;
                }
                let rest = PslWord::commutator(x, y).inverse().multiply(w);
                match solve_product(&rest, genus - 1, max_len, budget) {
                    Search::Found(mut pairs) => {
                        pairs.insert(0, (x.clone(), y.clone()));
                        return Search::Found(pairs);
                    }
                    Search::OutOfBudget => return Search::OutOfBudget,
                    Search::NotFound => {}
                }
            }
        }
    }
    Search::NotFound
}

fn lift_pairs(pairs: &[(PslWord, PslWord)]) -> CommutatorWitness {
    CommutatorWitness {
        pairs: pairs.iter().map(|(x, y)| (x.lift(), y.lift())).collect(),
    }
}

fn check_derived(m: &Mat2) -> Result<()> {
    if m.det() != 1 || !in_derived_sl(m)? {
        return Err(Error::NotInDerivedSubgroup);
    }
    Ok(())
}

/// A pair `(x, y)` of det +1 matrices with `m = [x, y]`, if one exists.
pub fn commutator_solution(m: &Mat2) -> Result<Option<(Mat2, Mat2)>> {
    check_derived(m)?;
    let (_, w) = alpha_project(m);
    let mut budget = Budget {
        remaining: u64::MAX,
    };
    Ok(match solve_commutator(&w, &mut budget) {
        Search::Found((x, y)) => {
            let pair = (x.lift(), y.lift());
            debug_assert_eq!(&Mat2::commutator(&pair.0, &pair.1), m);
            Some(pair)
        }
        Search::NotFound | Search::OutOfBudget => None,
    })
}

pub fn is_commutator(m: &Mat2) -> Result<bool> {
    Ok(commutator_solution(m)?.is_some())
}

/// Smallest `g ≤ g_max` with `m` a product of `g` commutators.
///
/// `budget` caps the number of search nodes spent on each genus.
pub fn genus_search(m: &Mat2, g_max: usize, budget: u64) -> Result<GenusOutcome> {
    if g_max == 0 {
        return Err(Error::Domain("genus bound must be positive".into()));
    }
    check_derived(m)?;
    let upper_bound = rewrite_in_free_basis(m)?.len();
    if m.is_identity() {
        return Ok(GenusOutcome::Found {
            genus: 0,
            witness: CommutatorWitness { pairs: Vec::new() },
        });
    }
    let (_, w) = alpha_project(m);
    let max_len = w.cyclic_reduction().1.len() + GENUS_ONE_SLACK;

    for genus in 1..=g_max {
        if genus == upper_bound {
            return Ok(GenusOutcome::Found {
                genus,
                witness: commutator_witness(m)?,
            });
        }
        let mut per_genus = Budget { remaining: budget };
        match solve_product(&w, genus, max_len, &mut per_genus) {
            Search::Found(pairs) => {
                let witness = lift_pairs(&pairs);
                debug_assert!(witness.verifies(m));
                return Ok(GenusOutcome::Found { genus, witness });
            }
            // Only the genus-1 search is exhaustive.
            Search::NotFound if genus == 1 => {}
            Search::NotFound | Search::OutOfBudget => {
                return Ok(GenusOutcome::Inconclusive {
                    lower_bound: genus,
                    upper_bound,
                })
            }
        }
    }
    Ok(GenusOutcome::ExceedsMax { g_max })
}
