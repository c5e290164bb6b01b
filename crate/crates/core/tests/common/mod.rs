#![allow(dead_code)]

use galois_closure::connection::{adjoint_from_lower, Parameterization};
use galois_closure::inference::{Implication, Theory};
use galois_closure::lattice::FiniteLattice;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random intersection-closed family of subsets of `{0,1,2}` containing the
/// full set, ordered by inclusion. Always a lattice; between 1 and 8 elements.
pub fn random_lattice(rng: &mut Rng8) -> FiniteLattice {
    let mut family: Vec<u8> = vec![0b111];
    for m in 0..7u8 {
        if rng.gen_bool(0.5) {
            family.push(m);
        }
    }
    loop {
        let mut grown = family.clone();
        for &a in &family {
            for &b in &family {
                if !grown.contains(&(a & b)) {
                    grown.push(a & b);
                }
            }
        }
        if grown.len() == family.len() {
            break;
        }
        family = grown;
    }
    family.sort_unstable();
    let names: Vec<String> = family.iter().map(|m| format!("s{m}")).collect();
    FiniteLattice::from_order_fn(&names, |i, j| family[i] & !family[j] == 0)
        .expect("closure systems are lattices")
}

/// `x ↦ ⋁{g(j) : j ≤ x}` for a random `g`; kept only if it preserves joins.
pub fn random_lower_map(rng: &mut Rng8, l: &FiniteLattice) -> Option<Vec<usize>> {
    let g: Vec<usize> = l.elements().map(|_| rng.gen_range(0..l.len())).collect();
    let mut g = g;
    g[l.bottom()] = l.bottom();
    let f: Vec<usize> = l
        .elements()
        .map(|x| l.join_all(l.down_set(x).map(|j| g[j])))
        .collect();
    adjoint_from_lower(l, f.clone()).ok().map(|_| f)
}

/// The identity plus up to two random connections.
pub fn random_parameterization(rng: &mut Rng8, l: &FiniteLattice) -> Parameterization {
    let mut p = Parameterization::identity(l);
    for k in 0..rng.gen_range(0..=2) {
        if let Some(f) = random_lower_map(rng, l) {
            p.insert(format!("g{k}"), adjoint_from_lower(l, f).unwrap());
        }
    }
    p
}

/// On a powerset: `A ↦ ⋃{R(y) : y ∈ A}` for a random relation `R`.
pub fn random_relation_connection(rng: &mut Rng8, l: &FiniteLattice, attrs: usize) -> Vec<usize> {
    let images: Vec<usize> = (0..attrs).map(|_| rng.gen_range(0..1usize << attrs)).collect();
    l.elements()
        .map(|a| {
            (0..attrs)
                .filter(|y| a & (1 << y) != 0)
                .fold(0, |m, y| m | images[y])
        })
        .collect()
}

pub fn random_element(rng: &mut Rng8, l: &FiniteLattice) -> usize {
    rng.gen_range(0..l.len())
}

pub fn random_theory(rng: &mut Rng8, l: &FiniteLattice, max: usize) -> Theory<usize> {
    let n = rng.gen_range(0..=max);
    (0..n)
        .map(|_| Implication::new(random_element(rng, l), random_element(rng, l)))
        .collect()
}

pub fn shuffle<T>(rng: &mut Rng8, v: &mut [T]) {
    v.shuffle(rng);
}

pub fn chain(n: usize) -> FiniteLattice {
    let names: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
    FiniteLattice::chain(&names).unwrap()
}
