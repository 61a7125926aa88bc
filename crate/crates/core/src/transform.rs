//! Harsanyi dividends over the subset lattice and the support bookkeeping built on them.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::game::{Coalition, DiversityGame, Game, PlayerId};
use crate::scalar::Scalar;

/// In place: `a[T] ← Σ_{R⊆T} (−1)^{|T|−|R|} a[R]`.
pub fn mobius_in_place(table: &mut [Scalar]) {
    butterfly(table, |lo, hi| *hi -= lo);
}

/// In place: `a[T] ← Σ_{R⊆T} a[R]`.
pub fn zeta_in_place(table: &mut [Scalar]) {
    butterfly(table, |lo, hi| *hi += lo);
}

fn butterfly(table: &mut [Scalar], op: impl Fn(&Scalar, &mut Scalar)) {
    assert!(table.len().is_power_of_two());
    let mut half = 1;
    while half < table.len() {
        for chunk in table.chunks_exact_mut(2 * half) {
            let (lo, hi) = chunk.split_at_mut(half);
            for (a, b) in lo.iter().zip(hi.iter_mut()) {
                op(a, b);
            }
        }
        half *= 2;
    }
}

/// Harsanyi dividends `Δ_T(v)` for every coalition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DividendTable {
    names: Vec<String>,
    delta: Vec<Scalar>,
}

impl DividendTable {
    pub fn new(names: Vec<String>, delta: Vec<Scalar>) -> Result<Self> {
        if delta.len() != 1 << names.len() {
            return Err(Error::PlayerCountMismatch {
                left: names.len(),
                right: delta.len().trailing_zeros() as usize,
            });
        }
        if !delta[0].is_zero() {
            return Err(Error::NonzeroEmptyDividend);
        }
        Ok(DividendTable { names, delta })
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn get(&self, t: Coalition) -> &Scalar {
        &self.delta[t.index()]
    }

    pub fn table(&self) -> &[Scalar] {
        &self.delta
    }

    /// Nonzero dividends, ascending by mask.
    pub fn nonzero(&self) -> impl Iterator<Item = (Coalition, &Scalar)> {
        self.delta
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(t, x)| (Coalition::from_mask(t as u32), x))
    }

    /// `v = Σ_T Δ_T u_T`.
    pub fn synthesize(&self) -> Game {
        let mut table = self.delta.clone();
        zeta_in_place(&mut table);
        Game::from_table_unchecked(self.names.clone(), table)
    }
}

pub fn dividends(v: &Game) -> DividendTable {
    let mut delta = v.table().to_vec();
    mobius_in_place(&mut delta);
    DividendTable {
        names: v.names().to_vec(),
        delta,
    }
}

/// Builds `Σ c_T u_T` from sparse terms, summing repeated coalitions.
pub fn game_from_dividends<I>(names: Vec<String>, terms: I) -> Result<Game>
where
    I: IntoIterator<Item = (Coalition, Scalar)>,
{
    let n = names.len();
    let mut delta = vec![Scalar::zero(); 1 << n];
    for (t, c) in terms {
        if !t.fits(n) {
            return Err(Error::CoalitionOutOfRange { mask: t.mask(), n });
        }
        delta[t.index()] += c;
    }
    Ok(DividendTable::new(names, delta)?.synthesize())
}

/// Traces of the support on one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTraces {
    /// `P(𝓘)`: distinct nonempty `B_p ∩ T` for `T` in the support, ascending.
    pub traces: Vec<Coalition>,
    /// `γ(B_p)`: members of the block lying in every support coalition.
    pub common: Coalition,
}

/// Support of the diversity-restricted game: `𝓘(v^d)`, `𝓣(v^d)` and per-block traces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportInfo {
    /// Coalitions with nonzero dividend in `v^d`, with that dividend, ascending.
    pub support: Vec<(Coalition, Scalar)>,
    /// Intersection of the support; every player when the support is empty.
    pub universal: Coalition,
    pub blocks: Vec<BlockTraces>,
}

impl SupportInfo {
    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn coalitions(&self) -> impl Iterator<Item = Coalition> + '_ {
        self.support.iter().map(|(t, _)| *t)
    }
}

pub fn support(g: &DiversityGame) -> SupportInfo {
    let dt = dividends(&g.restrict_to_diverse());
    let support: Vec<(Coalition, Scalar)> = dt.nonzero().map(|(t, x)| (t, x.clone())).collect();
    let universal = support
        .iter()
        .fold(g.game().grand_coalition(), |acc, (t, _)| {
            acc.intersection(*t)
        });
    let blocks = g
        .structure()
        .blocks()
        .iter()
        .map(|&b| {
            let mut traces: Vec<Coalition> = support
                .iter()
                .map(|(t, _)| t.intersection(b))
                .filter(|s| !s.is_empty())
                .collect();
            traces.sort();
            traces.dedup();
            BlockTraces {
                traces,
                common: universal.intersection(b),
            }
        })
        .collect();
    SupportInfo {
        support,
        universal,
        blocks,
    }
}

/// The two-trace swap used when a block's traces split it into `S₁ ⊔ S₂`:
///
/// `(v′)^d = Σ_{T: S₂⊆T} Δ(T) u_T − Σ_{T: S₁⊆T} Δ(T) u_{(T∖{i})∪{j}}`
///
/// where `S₁` is the trace holding `i` and `S₂` the one holding `j`.
pub fn swap_support_transform(
    g: &DiversityGame,
    p: usize,
    i: PlayerId,
    j: PlayerId,
) -> Result<Game> {
    let m = g.structure().m();
    if p >= m {
        return Err(Error::BlockOutOfRange { block: p, m });
    }
    let info = support(g);
    let block = g.structure().block(p);
    let traces = &info.blocks[p].traces;
    if traces.len() != 2 {
        return Err(Error::SwapPrecondition(format!(
            "block {p} has {} distinct traces, need exactly 2",
            traces.len()
        )));
    }
    let (a, b) = (traces[0], traces[1]);
    if !a.intersection(b).is_empty() {
        return Err(Error::SwapPrecondition("traces overlap".into()));
    }
    if a.union(b) != block {
        return Err(Error::SwapPrecondition(
            "traces do not cover the block".into(),
        ));
    }
    let (s1, s2) = if a.contains(i) { (a, b) } else { (b, a) };
    if !s1.contains(i) {
        return Err(Error::SwapPrecondition(format!(
            "player {i} lies in neither trace"
        )));
    }
    if !s2.contains(j) {
        return Err(Error::SwapPrecondition(format!(
            "player {j} is not in the other trace"
        )));
    }
    let mut terms = Vec::with_capacity(info.len());
    for (t, delta) in &info.support {
        let trace = t.intersection(block);
        if trace == s2 {
            terms.push((*t, delta.clone()));
        } else if trace == s1 {
            terms.push((t.without(i).with(j), -delta.clone()));
        }
    }
    game_from_dividends(g.game().names().to_vec(), terms)
}
