//! Brute-force oracles over raw worth tables, written without the library's transforms.
#![allow(dead_code)]

use dowen_core::{
    default_names, int, CoalitionStructure, DiversityBounds, DiversityGame, Game, Scalar,
};
use itertools::Itertools;
use num_traits::Zero;
use rand::Rng;

pub fn popcount(s: usize) -> usize {
    s.count_ones() as usize
}

/// Every subset of `t`, by scanning all masks below `2^n`.
pub fn subsets_of(t: usize, n: usize) -> impl Iterator<Item = usize> {
    (0..1usize << n).filter(move |r| r & !t == 0)
}

/// Δ_T = Σ_{R ⊆ T} (−1)^{|T|−|R|} v(R), one coalition at a time.
pub fn naive_dividends(table: &[Scalar], n: usize) -> Vec<Scalar> {
    (0..1usize << n)
        .map(|t| {
            subsets_of(t, n).fold(Scalar::zero(), |acc, r| {
                if (popcount(t) - popcount(r)).is_multiple_of(2) {
                    acc + &table[r]
                } else {
                    acc - &table[r]
                }
            })
        })
        .collect()
}

/// v(S) = Σ_{T ⊆ S} Δ_T.
pub fn naive_synthesize(delta: &[Scalar], n: usize) -> Vec<Scalar> {
    (0..1usize << n)
        .map(|s| subsets_of(s, n).fold(Scalar::zero(), |acc, t| acc + &delta[t]))
        .collect()
}

fn marginal_average(
    table: &[Scalar],
    n: usize,
    orders: impl Iterator<Item = Vec<usize>>,
) -> Vec<Scalar> {
    let mut totals = vec![Scalar::zero(); n];
    let mut count = 0i64;
    for order in orders {
        let mut s = 0usize;
        for p in order {
            totals[p] += &table[s | 1 << p] - &table[s];
            s |= 1 << p;
        }
        count += 1;
    }
    totals.into_iter().map(|x| x / int(count)).collect()
}

/// Average marginal contribution over all `n!` orders.
pub fn shapley_by_permutations(table: &[Scalar], n: usize) -> Vec<Scalar> {
    marginal_average(table, n, (0..n).permutations(n))
}

/// True when each block occupies consecutive positions in `order`.
pub fn is_block_contiguous(order: &[usize], blocks: &[usize]) -> bool {
    blocks.iter().filter(|&&b| b != 0).all(|&b| {
        let pos: Vec<usize> = order.iter().positions(|&p| b & (1 << p) != 0).collect();
        pos.last().unwrap() - pos[0] + 1 == pos.len()
    })
}

/// Average marginal contribution over the orders that keep every block together.
pub fn owen_by_permutations(table: &[Scalar], n: usize, blocks: &[usize]) -> Vec<Scalar> {
    let orders = (0..n)
        .permutations(n)
        .filter(|o| is_block_contiguous(o, blocks));
    marginal_average(table, n, orders)
}

/// `|S ∩ B_k| ≥ d_k` for all k, counted bit by bit.
pub fn diverse(s: usize, blocks: &[usize], d: &[usize]) -> bool {
    blocks.iter().zip(d).all(|(&b, &dk)| popcount(s & b) >= dk)
}

/// Random integer worths in `[-range, range]` with v(∅) = 0.
pub fn random_table<R: Rng>(rng: &mut R, n: usize, range: i64) -> Vec<Scalar> {
    (0..1usize << n)
        .map(|s| {
            if s == 0 {
                Scalar::zero()
            } else {
                int(rng.gen_range(-range..=range))
            }
        })
        .collect()
}

/// Random consecutive block sizes summing to `n`.
pub fn random_sizes<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut sizes = Vec::new();
    let mut left = n;
    while left > 0 {
        let k = rng.gen_range(1..=left);
        sizes.push(k);
        left -= k;
    }
    sizes
}

pub fn masks_of_sizes(sizes: &[usize]) -> Vec<usize> {
    let mut start = 0;
    sizes
        .iter()
        .map(|&k| {
            let b = ((1usize << k) - 1) << start;
            start += k;
            b
        })
        .collect()
}

/// Random quotas `1 ≤ d_k ≤ |B_k|`.
pub fn random_quotas<R: Rng>(rng: &mut R, sizes: &[usize]) -> Vec<usize> {
    sizes.iter().map(|&k| rng.gen_range(1..=k)).collect()
}

pub fn game(table: Vec<Scalar>) -> Game {
    let n = table.len().trailing_zeros() as usize;
    Game::from_table(default_names(n), table).unwrap()
}

pub fn diversity_game(table: Vec<Scalar>, sizes: &[usize], d: &[usize]) -> DiversityGame {
    DiversityGame::new(
        game(table),
        CoalitionStructure::from_sizes(sizes).unwrap(),
        DiversityBounds::new(d.to_vec()),
    )
    .unwrap()
}
