use std::collections::BTreeMap;

use crate::scalars::ScalarSeries;
use crate::REWRITE_ITERATION_CAP;

use super::element::{AlgebraElement, Monomial};
use super::spec::AlgebraError;

/// Which adjacent inversion to rewrite first. Both strategies reach the
/// same normal form on a consistent bracket table (checked by property
/// tests); exposing the choice makes that confluence testable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Bracket table keyed by generator ranks `(lo, hi)` with `lo < hi`; the
/// stored element is the normal-ordered commutator `[g_hi, g_lo]`.
pub(crate) type BracketMap = BTreeMap<(usize, usize), AlgebraElement>;

/// Merge a pending word into the work set, summing coefficients when the
/// same word is reached along different rewrite paths. Without merging the
/// number of pending items grows with the number of derivation paths, which
/// is exponential in the word length; with it, growth is bounded by the
/// number of distinct words.
fn push_work(work: &mut BTreeMap<Vec<usize>, ScalarSeries>, w: Vec<usize>, c: ScalarSeries) {
    use std::collections::btree_map::Entry;
    match work.entry(w) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let order = o.get().order().min(c.order());
            let sum = &o.get().truncate(order) + &c.truncate(order);
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

/// Rewrite a word of generator ranks into normal order.
///
/// Each step either swaps one adjacent inversion (pushing the commutator
/// correction as new work) or retires a sorted word into the accumulator.
/// Termination for Lie-type tables follows from the (tau budget, word
/// length, inversion count) measure; the global step cap catches runaway
/// user-authored tables.
pub(crate) fn normal_order_word(
    table: &BracketMap,
    ngens: usize,
    word: &[usize],
    coeff: ScalarSeries,
    strategy: Strategy,
) -> Result<AlgebraElement, AlgebraError> {
    let mut acc = AlgebraElement::zero(ngens, coeff.order());
    let mut work: BTreeMap<Vec<usize>, ScalarSeries> = BTreeMap::new();
    push_work(&mut work, word.to_vec(), coeff);
    let mut steps: u64 = 0;

    while let Some((w, c)) = work.pop_last() {
        if c.is_zero() {
            continue;
        }
        steps += 1;
        if steps > REWRITE_ITERATION_CAP {
            return Err(AlgebraError::IterationCap);
        }

        let inversion = match strategy {
            Strategy::Leftmost => (1..w.len()).find(|&i| w[i - 1] > w[i]),
            Strategy::Rightmost => (1..w.len()).rev().find(|&i| w[i - 1] > w[i]),
        };

        let Some(i) = inversion else {
            let mut exps = vec![0u32; ngens];
            for &r in &w {
                exps[r] += 1;
            }
            acc.add_term(Monomial::from_exponents(exps), c);
            continue;
        };

        let (hi, lo) = (w[i - 1], w[i]);
        let mut swapped = w.clone();
        swapped.swap(i - 1, i);
        push_work(&mut work, swapped, c.clone());

        let entry = table
            .get(&(lo, hi))
            .ok_or(AlgebraError::MissingBracket { hi, lo })?;
        for (m, entry_coeff) in entry.iter() {
            let order = c.order().min(entry_coeff.order());
            let nc = &c.truncate(order) * &entry_coeff.truncate(order);
            if nc.is_zero() {
                continue;
            }
            let inner = m.letters();
            let mut nw = Vec::with_capacity(w.len() - 2 + inner.len());
            nw.extend_from_slice(&w[..i - 1]);
            nw.extend(inner);
            nw.extend_from_slice(&w[i + 1..]);
            push_work(&mut work, nw, nc);
        }
    }

    Ok(acc)
}
