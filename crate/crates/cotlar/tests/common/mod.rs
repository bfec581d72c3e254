//! Shared independent oracles for the integration suites. These must not
//! reuse the implementation paths they check.

use std::collections::HashSet;

use cotlar::gp::{GPElement, GraphProduct, Syllable};

/// Independent two-valued symbol on a graph product, computed by shuffle
/// search over raw syllable sequences: the value is -1 exactly when some
/// sequence of adjacent commuting swaps brings a syllable of the
/// distinguished vertex to the front. No Coxeter-side descent logic is
/// involved.
pub fn shuffle_front_symbol(gp: &GraphProduct, u: usize, g: &GPElement) -> i64 {
    let start: Vec<Syllable> = g.syllables().to_vec();
    if start.is_empty() {
        return 1;
    }
    let mut seen: HashSet<Vec<Syllable>> = HashSet::new();
    let mut stack = vec![start.clone()];
    seen.insert(start);
    while let Some(w) = stack.pop() {
        if w[0].0 == u {
            return -1;
        }
        for i in 0..w.len() - 1 {
            if gp.commutes(w[i].0, w[i + 1].0) {
                let mut nb = w.clone();
                nb.swap(i, i + 1);
                if seen.insert(nb.clone()) {
                    stack.push(nb);
                }
            }
        }
    }
    1
}
