//! Solution concepts and the rival values used for differential axiom checks.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::game::{Coalition, CoalitionStructure, DiversityGame, Game, PlayerId};
use crate::scalar::Scalar;
use crate::transform::dividends;

/// Largest game the permutation oracle accepts.
pub const ORACLE_MAX_PLAYERS: usize = 9;

/// A payoff vector in canonical player order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Allocation {
    names: Vec<String>,
    pay: Vec<Scalar>,
}

impl Allocation {
    pub fn new(names: Vec<String>, pay: Vec<Scalar>) -> Self {
        assert_eq!(names.len(), pay.len(), "one payoff per player");
        Allocation { names, pay }
    }

    pub fn zero(names: &[String]) -> Self {
        Allocation {
            names: names.to_vec(),
            pay: vec![Scalar::zero(); names.len()],
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn pay(&self) -> &[Scalar] {
        &self.pay
    }

    pub fn get(&self, p: PlayerId) -> &Scalar {
        &self.pay[p.index()]
    }

    pub fn total(&self) -> Scalar {
        self.pay.iter().sum()
    }

    pub fn sum_over(&self, s: Coalition) -> Scalar {
        s.players().map(|p| &self.pay[p.index()]).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Scalar)> {
        self.names.iter().map(String::as_str).zip(&self.pay)
    }
}

impl fmt::Display for Allocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, (name, x)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{name}={x}")?;
        }
        write!(f, ")")
    }
}

fn size(k: usize) -> Scalar {
    Scalar::from_integer(BigInt::from(k))
}

/// Each dividend split equally among its members.
pub fn shapley(v: &Game) -> Allocation {
    let mut pay = vec![Scalar::zero(); v.n()];
    for (t, delta) in dividends(v).nonzero() {
        let share = delta / size(t.len());
        for p in t.players() {
            pay[p.index()] += &share;
        }
    }
    Allocation::new(v.names().to_vec(), pay)
}

/// Owen value by dividend splitting: `Δ_T` goes in equal parts to the blocks meeting `T`,
/// and each block's part in equal parts to its members inside `T`.
pub fn owen(v: &Game, structure: &CoalitionStructure) -> Result<Allocation> {
    if v.n() != structure.n() {
        return Err(Error::PlayerCountMismatch {
            left: v.n(),
            right: structure.n(),
        });
    }
    Ok(owen_unchecked(v, structure))
}

fn owen_unchecked(v: &Game, structure: &CoalitionStructure) -> Allocation {
    let mut pay = vec![Scalar::zero(); v.n()];
    for (t, delta) in dividends(v).nonzero() {
        let traces: Vec<Coalition> = structure
            .blocks()
            .iter()
            .map(|b| b.intersection(t))
            .filter(|s| !s.is_empty())
            .collect();
        let block_share = delta / size(traces.len());
        for trace in traces {
            let share = &block_share / size(trace.len());
            for p in trace.players() {
                pay[p.index()] += &share;
            }
        }
    }
    Allocation::new(v.names().to_vec(), pay)
}

/// Owen value as the average marginal contribution over every order that keeps each
/// block contiguous. Factorial cost; capped at [`ORACLE_MAX_PLAYERS`].
pub fn owen_permutation_oracle(v: &Game, structure: &CoalitionStructure) -> Result<Allocation> {
    if v.n() != structure.n() {
        return Err(Error::PlayerCountMismatch {
            left: v.n(),
            right: structure.n(),
        });
    }
    if v.n() > ORACLE_MAX_PLAYERS {
        return Err(Error::OracleTooLarge {
            n: v.n(),
            max: ORACLE_MAX_PLAYERS,
        });
    }
    let blocks: Vec<Vec<PlayerId>> = structure
        .blocks()
        .iter()
        .filter(|b| !b.is_empty())
        .map(|b| b.players().collect())
        .collect();
    let mut totals = vec![Scalar::zero(); v.n()];
    let mut orders = 0u64;
    let mut block_order: Vec<usize> = (0..blocks.len()).collect();
    for_each_permutation(&mut block_order, &mut |block_order| {
        let ordered: Vec<Vec<PlayerId>> = block_order.iter().map(|&k| blocks[k].clone()).collect();
        walk_inner(v, &ordered, 0, Coalition::EMPTY, &mut totals, &mut orders);
    });
    let count = Scalar::from_integer(BigInt::from(orders));
    let pay = totals.into_iter().map(|x| x / &count).collect();
    Ok(Allocation::new(v.names().to_vec(), pay))
}

// Enumerates the within-block orders of blocks `k..` given the players already placed.
fn walk_inner(
    v: &Game,
    blocks: &[Vec<PlayerId>],
    k: usize,
    before: Coalition,
    totals: &mut [Scalar],
    orders: &mut u64,
) {
    if k == blocks.len() {
        *orders += 1;
        return;
    }
    let mut members = blocks[k].clone();
    for_each_permutation(&mut members, &mut |order| {
        let mut s = before;
        let mut gains = Vec::with_capacity(order.len());
        for &p in order.iter() {
            let next = s.with(p);
            gains.push((p, v.worth(next) - v.worth(s)));
            s = next;
        }
        // Each inner order of this block is followed by every completion of the rest,
        // so the gains are weighted by the number of those completions.
        let before_count = *orders;
        walk_inner(v, blocks, k + 1, s, totals, orders);
        let completions = Scalar::from_integer(BigInt::from(*orders - before_count));
        for (p, gain) in gains {
            totals[p.index()] += gain * &completions;
        }
    });
}

/// Heap's algorithm.
fn for_each_permutation<T>(items: &mut [T], f: &mut dyn FnMut(&[T])) {
    fn heap<T>(k: usize, items: &mut [T], f: &mut dyn FnMut(&[T])) {
        if k <= 1 {
            f(items);
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, items, f);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
        heap(k - 1, items, f);
    }
    let len = items.len();
    heap(len, items, f);
}

/// `DOw(N, v, 𝓑, d) = Ow(N, v^d, 𝓑)`.
pub fn diversity_owen(g: &DiversityGame) -> Allocation {
    owen_unchecked(&g.restrict_to_diverse(), g.structure())
}

pub fn equal_division(g: &DiversityGame) -> Allocation {
    let v = g.game();
    let share = v.grand_worth() / size(v.n());
    Allocation::new(v.names().to_vec(), vec![share; v.n()])
}

/// `v(N)` split equally across the nonempty blocks, then equally inside each block.
pub fn block_equal_division(g: &DiversityGame) -> Allocation {
    let v = g.game();
    let structure = g.structure();
    let mut pay = vec![Scalar::zero(); v.n()];
    let active = structure.active_blocks();
    for b in structure.blocks().iter().filter(|b| !b.is_empty()) {
        let share = v.grand_worth() / size(active) / size(b.len());
        for p in b.players() {
            pay[p.index()] = share.clone();
        }
    }
    Allocation::new(v.names().to_vec(), pay)
}

type Evaluator = dyn Fn(&DiversityGame) -> Allocation + Send + Sync;

/// A named value on games with diversity constraints.
#[derive(Clone)]
pub struct ValueFunctional {
    name: String,
    eval: Arc<Evaluator>,
}

impl ValueFunctional {
    pub fn new<F>(name: impl Into<String>, eval: F) -> Self
    where
        F: Fn(&DiversityGame) -> Allocation + Send + Sync + 'static,
    {
        ValueFunctional {
            name: name.into(),
            eval: Arc::new(eval),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn evaluate(&self, g: &DiversityGame) -> Allocation {
        (self.eval)(g)
    }
}

impl fmt::Debug for ValueFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ValueFunctional")
            .field("name", &self.name)
            .finish()
    }
}

pub const VALUE_NAMES: [&str; 6] = [
    "dowen",
    "owen_raw",
    "shapley_raw",
    "shapley_restricted",
    "eqdiv",
    "blockdiv",
];

pub fn value_by_name(name: &str) -> Result<ValueFunctional> {
    let f = match name {
        "dowen" => ValueFunctional::new(name, diversity_owen),
        "owen_raw" => ValueFunctional::new(name, |g: &DiversityGame| {
            owen_unchecked(g.game(), g.structure())
        }),
        "shapley_raw" => ValueFunctional::new(name, |g: &DiversityGame| shapley(g.game())),
        "shapley_restricted" => {
            ValueFunctional::new(name, |g: &DiversityGame| shapley(&g.restrict_to_diverse()))
        }
        "eqdiv" => ValueFunctional::new(name, equal_division),
        "blockdiv" => ValueFunctional::new(name, block_equal_division),
        _ => return Err(Error::UnknownValue(name.to_string())),
    };
    Ok(f)
}

/// Sum of payoffs inside each block, inert blocks included (as zero).
pub fn block_sums(a: &Allocation, structure: &CoalitionStructure) -> Vec<Scalar> {
    structure.blocks().iter().map(|&b| a.sum_over(b)).collect()
}

/// Number of admissible orders for the permutation oracle: `m! · Π |B_k|!`.
pub fn admissible_orders(structure: &CoalitionStructure) -> BigInt {
    let fact = |k: usize| (1..=k).fold(BigInt::one(), |acc, x| acc * x);
    let sizes: Vec<usize> = structure
        .blocks()
        .iter()
        .filter(|b| !b.is_empty())
        .map(|b| b.len())
        .collect();
    sizes
        .iter()
        .fold(fact(sizes.len()), |acc, &s| acc * fact(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{default_names, DiversityBounds};
    use crate::scalar::{int, ratio};

    fn c(players: &[usize]) -> Coalition {
        Coalition::from_players(players.iter().map(|p| p - 1))
    }

    fn pays(a: &Allocation) -> Vec<Scalar> {
        a.pay().to_vec()
    }

    fn u3_game() -> DiversityGame {
        DiversityGame::new(
            Game::unanimity(3, c(&[3])).unwrap(),
            CoalitionStructure::new(3, vec![c(&[1, 2]), c(&[3])]).unwrap(),
            DiversityBounds::new(vec![1, 1]),
        )
        .unwrap()
    }

    #[test]
    fn shapley_basics() {
        let u = Game::unanimity(3, c(&[1, 2])).unwrap();
        assert_eq!(pays(&shapley(&u)), vec![ratio(1, 2), ratio(1, 2), int(0)]);
        let additive = Game::new(
            default_names(3),
            Coalition::all(3).skip(1).map(|s| {
                let w: i64 = s.players().map(|p| [2, -1, 5][p.index()]).sum();
                (s, int(w))
            }),
        )
        .unwrap();
        assert_eq!(pays(&shapley(&additive)), vec![int(2), int(-1), int(5)]);
    }

    #[test]
    fn owen_on_grand_unanimity() {
        let u = Game::unanimity(3, Coalition::full(3)).unwrap();
        let b = CoalitionStructure::new(3, vec![c(&[1, 2]), c(&[3])]).unwrap();
        let expected = vec![ratio(1, 4), ratio(1, 4), ratio(1, 2)];
        assert_eq!(pays(&owen(&u, &b).unwrap()), expected);
        assert_eq!(pays(&owen_permutation_oracle(&u, &b).unwrap()), expected);
        assert_eq!(admissible_orders(&b), BigInt::from(4));
    }

    #[test]
    fn owen_mismatch_and_oracle_gate() {
        let u = Game::unanimity(3, Coalition::full(3)).unwrap();
        assert!(matches!(
            owen(&u, &CoalitionStructure::grand(2).unwrap()),
            Err(Error::PlayerCountMismatch { .. })
        ));
        let big = Game::zero(default_names(10)).unwrap();
        assert_eq!(
            owen_permutation_oracle(&big, &CoalitionStructure::grand(10).unwrap()),
            Err(Error::OracleTooLarge { n: 10, max: 9 })
        );
    }

    #[test]
    fn diversity_owen_redistributes() {
        let g = u3_game();
        assert_eq!(
            pays(&diversity_owen(&g)),
            vec![ratio(1, 4), ratio(1, 4), ratio(1, 2)]
        );
        assert_eq!(pays(&shapley(g.game())), vec![int(0), int(0), int(1)]);
    }

    #[test]
    fn diversity_owen_of_empty_support_is_zero() {
        // only {1,2,3} is diverse and v vanishes there
        let v = Game::new(default_names(3), [(c(&[1, 3]), int(4))]).unwrap();
        let g = DiversityGame::new(
            v,
            u3_game().structure().clone(),
            DiversityBounds::new(vec![2, 1]),
        )
        .unwrap();
        assert_eq!(diversity_owen(&g), Allocation::zero(g.game().names()));
    }

    #[test]
    fn baselines() {
        let g4 = DiversityGame::new(
            Game::unanimity(4, Coalition::full(4)).unwrap(),
            CoalitionStructure::grand(4).unwrap(),
            DiversityBounds::new(vec![1]),
        )
        .unwrap();
        assert_eq!(pays(&equal_division(&g4)), vec![ratio(1, 4); 4]);
        let zero = g4.with_game(Game::zero(default_names(4)).unwrap()).unwrap();
        assert_eq!(equal_division(&zero), Allocation::zero(zero.game().names()));
        assert_eq!(
            block_equal_division(&zero),
            Allocation::zero(zero.game().names())
        );
        let g = u3_game();
        assert_eq!(
            pays(&block_equal_division(&g)),
            vec![ratio(1, 4), ratio(1, 4), ratio(1, 2)]
        );
    }

    #[test]
    fn value_lookup() {
        let g = u3_game();
        assert_eq!(
            value_by_name("dowen").unwrap().evaluate(&g),
            diversity_owen(&g)
        );
        let diverse = g.restricted();
        assert_eq!(
            value_by_name("owen_raw").unwrap().evaluate(&diverse),
            value_by_name("dowen").unwrap().evaluate(&diverse)
        );
        assert_eq!(
            value_by_name("nonsense").unwrap_err(),
            Error::UnknownValue("nonsense".into())
        );
        for name in VALUE_NAMES {
            assert_eq!(value_by_name(name).unwrap().name(), name);
        }
    }

    #[test]
    fn inert_blocks_are_ignored() {
        let g = u3_game()
            .with_game(Game::unanimity(3, c(&[1, 2])).unwrap())
            .unwrap();
        let sub = g.subgame(c(&[1, 2])).unwrap();
        assert!(sub.structure().is_inert(1));
        let ow = owen(sub.game(), sub.structure()).unwrap();
        assert_eq!(pays(&ow), vec![ratio(1, 2), ratio(1, 2)]);
        assert_eq!(
            ow,
            owen_permutation_oracle(sub.game(), sub.structure()).unwrap()
        );
        assert_eq!(
            pays(&block_equal_division(&sub)),
            vec![ratio(1, 2), ratio(1, 2)]
        );
    }
}
