//! Exact checkers for the axioms, applicable to any [`ValueFunctional`], and a seeded sweep
//! that enumerates instances over random games.
//!
//! Every check is an exact equality between rationals. An instance whose preconditions do
//! not hold is reported as skipped and never counted as a pass. A failure keeps the full
//! instance, so it can be replayed on its own with [`Witness::replay`].

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result, MAX_PLAYERS};
use crate::game::{
    default_names, index_after_removal, CoalitionStructure, DiversityBounds, DiversityGame, Game,
    PlayerId,
};
use crate::genfix::{perturb_with, sample_game};
use crate::scalar::Scalar;
use crate::values::{block_sums, ValueFunctional};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    /// Efficiency.
    E,
    /// Fairness within component.
    FwC,
    /// Fairness through diversity.
    FD,
    /// Independence from non-diverse coalitions.
    INDC,
    /// Null player out for preserving-diversity games.
    NPOPD,
    /// Null player for diverse games.
    ND,
    /// Equality through diversity.
    ED,
    /// Intra-coalitional balanced contributions with out players.
    IBCOPPD,
    /// The weak form: balanced contributions plus zero payoffs in the zero game.
    IBCOPPDMinus,
}

impl AxiomId {
    pub const ALL: [AxiomId; 9] = [
        AxiomId::E,
        AxiomId::FwC,
        AxiomId::FD,
        AxiomId::INDC,
        AxiomId::NPOPD,
        AxiomId::ND,
        AxiomId::ED,
        AxiomId::IBCOPPD,
        AxiomId::IBCOPPDMinus,
    ];

    pub fn label(self) -> &'static str {
        match self {
            AxiomId::E => "E",
            AxiomId::FwC => "FwC",
            AxiomId::FD => "FD",
            AxiomId::INDC => "INDC",
            AxiomId::NPOPD => "NPOPD",
            AxiomId::ND => "ND",
            AxiomId::ED => "ED",
            AxiomId::IBCOPPD => "IBCOPPD",
            AxiomId::IBCOPPDMinus => "IBCOPPD-",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase();
        let key = match key.as_str() {
            "IBCOPPD_MINUS" | "IBCOPPD-MINUS" | "IBCOPPD−" => "IBCOPPD-",
            other => other,
        };
        AxiomId::ALL
            .into_iter()
            .find(|a| a.label().to_ascii_uppercase() == key)
            .ok_or_else(|| Error::UnknownAxiom(s.to_string()))
    }
}

/// Comma-separated axiom labels; `all` expands to every axiom, an empty list is allowed.
pub fn parse_axiom_list(text: &str) -> Result<Vec<AxiomId>> {
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if item.eq_ignore_ascii_case("all") {
            out.extend(AxiomId::ALL);
        } else {
            out.push(item.parse()?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// One concrete application of an axiom: the games, players and blocks it binds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomInstance {
    Efficiency {
        game: DiversityGame,
    },
    /// `game` carries `v`; the partner is `w`.
    FairnessWithinComponent {
        game: DiversityGame,
        partner: Game,
        i: PlayerId,
        j: PlayerId,
    },
    FairnessThroughDiversity {
        game: DiversityGame,
        partner: Game,
        p: usize,
        q: usize,
    },
    IndependenceOfNonDiverse {
        game: DiversityGame,
        partner: Game,
    },
    NullPlayerOut {
        game: DiversityGame,
        player: PlayerId,
    },
    NullPlayerDiverse {
        game: DiversityGame,
        player: PlayerId,
    },
    EqualityThroughDiversity {
        game: DiversityGame,
    },
    BalancedContributions {
        game: DiversityGame,
        i: PlayerId,
        j: PlayerId,
    },
    WeakBalancedContributions {
        game: DiversityGame,
        i: PlayerId,
        j: PlayerId,
    },
}

/// The two sides of a violated equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub clause: String,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Skipped(String),
    Passed,
    Failed(Violation),
}

impl Outcome {
    fn expect_equal(clause: impl FnOnce() -> String, lhs: Scalar, rhs: Scalar) -> Option<Outcome> {
        (lhs != rhs).then(|| {
            Outcome::Failed(Violation {
                clause: clause(),
                lhs,
                rhs,
            })
        })
    }
}

fn same_block_outs(g: &DiversityGame, i: PlayerId, j: PlayerId) -> std::result::Result<(), String> {
    if i == j {
        return Err("players coincide".into());
    }
    if i.index() >= g.n() || j.index() >= g.n() {
        return Err("player out of range".into());
    }
    if g.structure().block_of(i) != g.structure().block_of(j) {
        return Err("players lie in different blocks".into());
    }
    if !g.is_out(i) || !g.is_out(j) {
        return Err("a player is not out".into());
    }
    if !g.is_diverse_game() {
        return Err("game is not diverse".into());
    }
    Ok(())
}

// f_i(g) − f_i(g∖j) = f_j(g) − f_j(g∖i), optionally followed by the null-in-subgame clauses.
fn balanced_contributions(
    f: &ValueFunctional,
    g: &DiversityGame,
    i: PlayerId,
    j: PlayerId,
    null_clauses: bool,
) -> Outcome {
    let name = |p: PlayerId| g.game().name(p).to_string();
    let full = f.evaluate(g);
    // (player, removed partner, subgame without the partner, player's index there)
    let sides: Vec<_> = [(i, j), (j, i)]
        .into_iter()
        .map(|(p, q)| {
            let sub = g.remove_player(q).expect("n ≥ 2");
            let at = index_after_removal(p, q).expect("p ≠ q");
            let value = f.evaluate(&sub);
            (p, q, sub, at, value)
        })
        .collect();
    let gain = |k: usize| full.get(sides[k].0) - sides[k].4.get(sides[k].3);
    if let Some(fail) = Outcome::expect_equal(
        || {
            format!(
                "f_{0}(N) - f_{0}(N\\{1}) = f_{1}(N) - f_{1}(N\\{0})",
                name(i),
                name(j)
            )
        },
        gain(0),
        gain(1),
    ) {
        return fail;
    }
    if null_clauses {
        for (p, q, sub, at, value) in &sides {
            if sub.game().is_null(*at) {
                if let Some(fail) = Outcome::expect_equal(
                    || {
                        format!(
                            "{0} null in N\\{1} so f_{0}(N\\{1}) = 0",
                            name(*p),
                            name(*q)
                        )
                    },
                    value.get(*at).clone(),
                    Scalar::zero(),
                ) {
                    return fail;
                }
            }
        }
    }
    Outcome::Passed
}

impl AxiomInstance {
    pub fn axiom(&self) -> AxiomId {
        match self {
            AxiomInstance::Efficiency { .. } => AxiomId::E,
            AxiomInstance::FairnessWithinComponent { .. } => AxiomId::FwC,
            AxiomInstance::FairnessThroughDiversity { .. } => AxiomId::FD,
            AxiomInstance::IndependenceOfNonDiverse { .. } => AxiomId::INDC,
            AxiomInstance::NullPlayerOut { .. } => AxiomId::NPOPD,
            AxiomInstance::NullPlayerDiverse { .. } => AxiomId::ND,
            AxiomInstance::EqualityThroughDiversity { .. } => AxiomId::ED,
            AxiomInstance::BalancedContributions { .. } => AxiomId::IBCOPPD,
            AxiomInstance::WeakBalancedContributions { .. } => AxiomId::IBCOPPDMinus,
        }
    }

    /// The game the instance is stated on.
    pub fn game(&self) -> &DiversityGame {
        match self {
            AxiomInstance::Efficiency { game }
            | AxiomInstance::FairnessWithinComponent { game, .. }
            | AxiomInstance::FairnessThroughDiversity { game, .. }
            | AxiomInstance::IndependenceOfNonDiverse { game, .. }
            | AxiomInstance::NullPlayerOut { game, .. }
            | AxiomInstance::NullPlayerDiverse { game, .. }
            | AxiomInstance::EqualityThroughDiversity { game }
            | AxiomInstance::BalancedContributions { game, .. }
            | AxiomInstance::WeakBalancedContributions { game, .. } => game,
        }
    }

    /// The second game of a two-game instance.
    pub fn partner(&self) -> Option<&Game> {
        match self {
            AxiomInstance::FairnessWithinComponent { partner, .. }
            | AxiomInstance::FairnessThroughDiversity { partner, .. }
            | AxiomInstance::IndependenceOfNonDiverse { partner, .. } => Some(partner),
            _ => None,
        }
    }

    pub fn check(&self, f: &ValueFunctional) -> Outcome {
        match self {
            AxiomInstance::Efficiency { game } => {
                let total = f.evaluate(game).total();
                Outcome::expect_equal(
                    || "sum f_i = v(N)".into(),
                    total,
                    game.game().grand_worth().clone(),
                )
                .unwrap_or(Outcome::Passed)
            }
            AxiomInstance::FairnessWithinComponent {
                game,
                partner,
                i,
                j,
            } => {
                let (i, j) = (*i, *j);
                if partner.n() != game.n() {
                    return Outcome::Skipped("partner has a different player count".into());
                }
                if i == j || i.index() >= game.n() || j.index() >= game.n() {
                    return Outcome::Skipped("need two distinct players".into());
                }
                if game.structure().block_of(i) != game.structure().block_of(j) {
                    return Outcome::Skipped("players lie in different blocks".into());
                }
                if game.game().are_symmetric(i, j) != Ok(true) {
                    return Outcome::Skipped("players not symmetric in v".into());
                }
                let sum = game
                    .with_game(game.game().add(partner).expect("same n"))
                    .expect("same n");
                let alone = game.with_game(partner.clone()).expect("same n");
                let a = f.evaluate(&sum);
                let b = f.evaluate(&alone);
                let name = |p: PlayerId| game.game().name(p).to_string();
                Outcome::expect_equal(
                    || {
                        format!(
                            "f_{0}(v+w) - f_{0}(w) = f_{1}(v+w) - f_{1}(w)",
                            name(i),
                            name(j)
                        )
                    },
                    a.get(i) - b.get(i),
                    a.get(j) - b.get(j),
                )
                .unwrap_or(Outcome::Passed)
            }
            AxiomInstance::FairnessThroughDiversity {
                game,
                partner,
                p,
                q,
            } => {
                let (p, q) = (*p, *q);
                let m = game.structure().m();
                if partner.n() != game.n() {
                    return Outcome::Skipped("partner has a different player count".into());
                }
                if p == q || p >= m || q >= m {
                    return Outcome::Skipped("need two distinct blocks".into());
                }
                let sum = game
                    .with_game(game.game().add(partner).expect("same n"))
                    .expect("same n");
                let alone = game.with_game(partner.clone()).expect("same n");
                let a = block_sums(&f.evaluate(&sum), game.structure());
                let b = block_sums(&f.evaluate(&alone), game.structure());
                Outcome::expect_equal(
                    || format!("block {p} gain = block {q} gain"),
                    &a[p] - &b[p],
                    &a[q] - &b[q],
                )
                .unwrap_or(Outcome::Passed)
            }
            AxiomInstance::IndependenceOfNonDiverse { game, partner } => {
                if partner.n() != game.n() {
                    return Outcome::Skipped("partner has a different player count".into());
                }
                let agree = game
                    .diverse_coalitions()
                    .into_iter()
                    .all(|s| game.game().worth(s) == partner.worth(s));
                if !agree {
                    return Outcome::Skipped("v and w differ on a diverse coalition".into());
                }
                let a = f.evaluate(game);
                let b = f.evaluate(&game.with_game(partner.clone()).expect("same n"));
                for p in (0..game.n()).map(PlayerId) {
                    if let Some(fail) = Outcome::expect_equal(
                        || format!("f_{0}(v) = f_{0}(w)", game.game().name(p)),
                        a.get(p).clone(),
                        b.get(p).clone(),
                    ) {
                        return fail;
                    }
                }
                Outcome::Passed
            }
            AxiomInstance::NullPlayerOut { game, player } => {
                let i = *player;
                if i.index() >= game.n() || game.n() < 2 {
                    return Outcome::Skipped("player out of range".into());
                }
                if !game.is_i_out_diverse(i) {
                    return Outcome::Skipped("game is not i-out diverse".into());
                }
                if !game.game().is_null(i) {
                    return Outcome::Skipped("player is not null".into());
                }
                let full = f.evaluate(game);
                let sub = f.evaluate(&game.remove_player(i).expect("n ≥ 2"));
                for j in (0..game.n()).map(PlayerId).filter(|&j| j != i) {
                    let j_sub = index_after_removal(j, i).expect("j ≠ i");
                    if let Some(fail) = Outcome::expect_equal(
                        || {
                            format!(
                                "f_{0}(N) = f_{0}(N\\{1})",
                                game.game().name(j),
                                game.game().name(i)
                            )
                        },
                        full.get(j).clone(),
                        sub.get(j_sub).clone(),
                    ) {
                        return fail;
                    }
                }
                Outcome::Passed
            }
            AxiomInstance::NullPlayerDiverse { game, player } => {
                let i = *player;
                if i.index() >= game.n() {
                    return Outcome::Skipped("player out of range".into());
                }
                if !game.is_diverse_game() {
                    return Outcome::Skipped("game is not diverse".into());
                }
                if !game.game().is_null(i) {
                    return Outcome::Skipped("player is not null".into());
                }
                Outcome::expect_equal(
                    || format!("f_{} = 0", game.game().name(i)),
                    f.evaluate(game).get(i).clone(),
                    Scalar::zero(),
                )
                .unwrap_or(Outcome::Passed)
            }
            AxiomInstance::EqualityThroughDiversity { game } => {
                let sums = block_sums(&f.evaluate(game), game.structure());
                for (q, s) in sums.iter().enumerate().skip(1) {
                    if let Some(fail) = Outcome::expect_equal(
                        || format!("block 0 sum = block {q} sum"),
                        sums[0].clone(),
                        s.clone(),
                    ) {
                        return fail;
                    }
                }
                Outcome::Passed
            }
            AxiomInstance::BalancedContributions { game, i, j } => {
                if let Err(why) = same_block_outs(game, *i, *j) {
                    return Outcome::Skipped(why);
                }
                balanced_contributions(f, game, *i, *j, true)
            }
            AxiomInstance::WeakBalancedContributions { game, i, j } => {
                let zero = game
                    .with_game(Game::zero(game.game().names().to_vec()).expect("valid names"))
                    .expect("same n");
                let at_zero = f.evaluate(&zero);
                for p in (0..game.n()).map(PlayerId) {
                    if let Some(fail) = Outcome::expect_equal(
                        || format!("f_{}(zero game) = 0", game.game().name(p)),
                        at_zero.get(p).clone(),
                        Scalar::zero(),
                    ) {
                        return fail;
                    }
                }
                if same_block_outs(game, *i, *j).is_err() {
                    // the zero-game clause alone was applicable
                    return Outcome::Passed;
                }
                balanced_contributions(f, game, *i, *j, false)
            }
        }
    }
}

/// A failing instance together with the equation it violated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub instance: AxiomInstance,
    pub violation: Violation,
}

impl Witness {
    /// Re-evaluates the instance from scratch.
    pub fn replay(&self, f: &ValueFunctional) -> Outcome {
        self.instance.check(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// No applicable instance was seen.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub axiom: AxiomId,
    pub tried: usize,
    pub applicable: usize,
    pub passed: usize,
    /// First failure in enumeration order.
    pub witness: Option<Box<Witness>>,
}

impl CheckReport {
    pub fn empty(axiom: AxiomId) -> Self {
        CheckReport {
            axiom,
            tried: 0,
            applicable: 0,
            passed: 0,
            witness: None,
        }
    }

    pub fn failed(&self) -> usize {
        self.applicable - self.passed
    }

    pub fn verdict(&self) -> Verdict {
        if self.failed() > 0 {
            Verdict::Fail
        } else if self.applicable == 0 {
            Verdict::Inconclusive
        } else {
            Verdict::Pass
        }
    }

    pub fn record(&mut self, instance: AxiomInstance, outcome: Outcome) {
        debug_assert_eq!(instance.axiom(), self.axiom);
        self.tried += 1;
        match outcome {
            Outcome::Skipped(_) => {}
            Outcome::Passed => {
                self.applicable += 1;
                self.passed += 1;
            }
            Outcome::Failed(violation) => {
                self.applicable += 1;
                if self.witness.is_none() {
                    self.witness = Some(Box::new(Witness {
                        instance,
                        violation,
                    }));
                }
            }
        }
    }

    /// Appends `later`; the earlier report's witness wins.
    pub fn merge(&mut self, later: CheckReport) {
        debug_assert_eq!(later.axiom, self.axiom);
        self.tried += later.tried;
        self.applicable += later.applicable;
        self.passed += later.passed;
        if self.witness.is_none() {
            self.witness = later.witness;
        }
    }

    fn single(f: &ValueFunctional, instance: AxiomInstance) -> Self {
        let mut report = CheckReport::empty(instance.axiom());
        let outcome = instance.check(f);
        report.record(instance, outcome);
        report
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match self.verdict() {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "inconclusive",
        };
        write!(
            f,
            "{:<9} {:<12} tried {:>6}  applicable {:>6}  passed {:>6}",
            self.axiom.label(),
            verdict,
            self.tried,
            self.applicable,
            self.passed
        )
    }
}

pub fn check_e(f: &ValueFunctional, g: &DiversityGame) -> CheckReport {
    CheckReport::single(f, AxiomInstance::Efficiency { game: g.clone() })
}

/// `g` supplies `v`, `𝓑` and `d`; `w` is the partner game.
pub fn check_fwc(
    f: &ValueFunctional,
    g: &DiversityGame,
    w: &Game,
    i: PlayerId,
    j: PlayerId,
) -> CheckReport {
    CheckReport::single(
        f,
        AxiomInstance::FairnessWithinComponent {
            game: g.clone(),
            partner: w.clone(),
            i,
            j,
        },
    )
}

pub fn check_fd(
    f: &ValueFunctional,
    g: &DiversityGame,
    w: &Game,
    p: usize,
    q: usize,
) -> CheckReport {
    CheckReport::single(
        f,
        AxiomInstance::FairnessThroughDiversity {
            game: g.clone(),
            partner: w.clone(),
            p,
            q,
        },
    )
}

pub fn check_indc(f: &ValueFunctional, g: &DiversityGame, w: &Game) -> CheckReport {
    CheckReport::single(
        f,
        AxiomInstance::IndependenceOfNonDiverse {
            game: g.clone(),
            partner: w.clone(),
        },
    )
}

pub fn check_npopd(f: &ValueFunctional, g: &DiversityGame, i: PlayerId) -> CheckReport {
    CheckReport::single(
        f,
        AxiomInstance::NullPlayerOut {
            game: g.clone(),
            player: i,
        },
    )
}

pub fn check_nd(f: &ValueFunctional, g: &DiversityGame, i: PlayerId) -> CheckReport {
    CheckReport::single(
        f,
        AxiomInstance::NullPlayerDiverse {
            game: g.clone(),
            player: i,
        },
    )
}

pub fn check_ed(f: &ValueFunctional, g: &DiversityGame) -> CheckReport {
    CheckReport::single(
        f,
        AxiomInstance::EqualityThroughDiversity { game: g.clone() },
    )
}

pub fn check_ibcoppd(
    f: &ValueFunctional,
    g: &DiversityGame,
    i: PlayerId,
    j: PlayerId,
) -> CheckReport {
    CheckReport::single(
        f,
        AxiomInstance::BalancedContributions {
            game: g.clone(),
            i,
            j,
        },
    )
}

pub fn check_ibcoppd_minus(
    f: &ValueFunctional,
    g: &DiversityGame,
    i: PlayerId,
    j: PlayerId,
) -> CheckReport {
    CheckReport::single(
        f,
        AxiomInstance::WeakBalancedContributions {
            game: g.clone(),
            i,
            j,
        },
    )
}

/// Block sizes and quotas of a generated game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape {
    pub block_sizes: Vec<usize>,
    pub d: Vec<usize>,
}

impl Shape {
    pub fn new(block_sizes: &[usize], d: &[usize]) -> Self {
        Shape {
            block_sizes: block_sizes.to_vec(),
            d: d.to_vec(),
        }
    }

    fn template(&self) -> Result<DiversityGame> {
        let structure = CoalitionStructure::from_sizes(&self.block_sizes)?;
        let zero = Game::zero(default_names(structure.n()))?;
        DiversityGame::new(zero, structure, DiversityBounds::new(self.d.clone()))
    }
}

/// What a sweep draws its games from.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    /// Trial `t` uses shape `t mod len`.
    pub shapes: Vec<Shape>,
    pub density: f64,
    pub range: i64,
    /// Checked in addition to the random trials, which then reuse its structure.
    pub base: Option<DiversityGame>,
}

impl SweepConfig {
    /// Mixed shapes with up to six players: slack blocks, tight blocks (`|B_k| = d_k`),
    /// a single block, and all singletons.
    pub fn standard() -> Self {
        SweepConfig {
            shapes: vec![
                Shape::new(&[2, 2], &[1, 1]),
                Shape::new(&[3, 2], &[2, 1]),
                Shape::new(&[2, 1, 2], &[2, 1, 1]),
                Shape::new(&[4], &[2]),
                Shape::new(&[3, 3], &[1, 2]),
                Shape::new(&[1, 1, 1], &[1, 1, 1]),
                Shape::new(&[2, 2, 2], &[1, 2, 1]),
                Shape::new(&[5], &[1]),
            ],
            density: 0.5,
            range: 5,
            base: None,
        }
    }

    /// Random trials on `base`'s structure, plus `base` itself.
    pub fn around(base: DiversityGame) -> Self {
        SweepConfig {
            shapes: Vec::new(),
            density: 0.5,
            range: 5,
            base: Some(base),
        }
    }

    fn templates(&self) -> Result<Vec<DiversityGame>> {
        if let Some(base) = &self.base {
            let zero = Game::zero(base.game().names().to_vec())?;
            return Ok(vec![base.with_game(zero)?]);
        }
        if self.shapes.is_empty() {
            return Err(Error::InvalidSpec("sweep needs at least one shape".into()));
        }
        self.shapes.iter().map(Shape::template).collect()
    }
}

fn same_block_pairs(g: &DiversityGame) -> Vec<(PlayerId, PlayerId)> {
    let mut pairs = Vec::new();
    for b in g.structure().blocks() {
        let members: Vec<PlayerId> = b.players().collect();
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Instances derived from one game `g`: the game itself, its restriction, a random partner,
/// a perturbation off the diverse coalitions, and an extension by a null outside player.
fn trial_instances<R: Rng>(
    g: &DiversityGame,
    wanted: &[AxiomId],
    density: f64,
    range: i64,
    rng: &mut R,
) -> Vec<AxiomInstance> {
    let want = |a: AxiomId| wanted.contains(&a);
    let diverse = g.restricted();
    let partner = sample_game(g, density, range, false, rng);
    let perturbed = perturb_with(g, rng);
    let block = rng.gen_range(0..g.structure().m());
    let ext =
        (g.n() < MAX_PLAYERS).then(|| diverse.add_outside_player(block).expect("block in range"));
    let zero = Game::zero(g.game().names().to_vec()).expect("valid names");

    let mut games = vec![g.clone(), diverse.clone()];
    games.extend(ext.clone());
    let mut out = Vec::new();

    for game in &games {
        if want(AxiomId::E) {
            out.push(AxiomInstance::Efficiency { game: game.clone() });
        }
        if want(AxiomId::ED) {
            out.push(AxiomInstance::EqualityThroughDiversity { game: game.clone() });
        }
    }
    if want(AxiomId::INDC) {
        out.push(AxiomInstance::IndependenceOfNonDiverse {
            game: g.clone(),
            partner: perturbed,
        });
        out.push(AxiomInstance::IndependenceOfNonDiverse {
            game: g.clone(),
            partner: diverse.game().clone(),
        });
    }
    if want(AxiomId::FD) {
        let m = g.structure().m();
        for p in 0..m {
            for q in p + 1..m {
                for v in [g, &diverse] {
                    out.push(AxiomInstance::FairnessThroughDiversity {
                        game: v.clone(),
                        partner: partner.clone(),
                        p,
                        q,
                    });
                }
            }
        }
    }
    if want(AxiomId::FwC) {
        for (i, j) in same_block_pairs(g) {
            let symmetrized = g.game().add(&g.game().swap_players(i, j)).expect("same n");
            for v in [g.game().clone(), zero.clone(), symmetrized] {
                out.push(AxiomInstance::FairnessWithinComponent {
                    game: g.with_game(v).expect("same n"),
                    partner: partner.clone(),
                    i,
                    j,
                });
            }
        }
        if let Some(ext) = &ext {
            // the outside player paired with each member of its block
            let l = PlayerId(ext.n() - 1);
            let ext_partner = diverse
                .with_game(partner.clone())
                .expect("same n")
                .add_outside_player(block)
                .expect("block in range");
            for i in ext.structure().block(block).players().filter(|&p| p != l) {
                let symmetrized = ext
                    .game()
                    .add(&ext.game().swap_players(i, l))
                    .expect("same n");
                out.push(AxiomInstance::FairnessWithinComponent {
                    game: ext.with_game(symmetrized).expect("same n"),
                    partner: ext_partner.game().clone(),
                    i,
                    j: l,
                });
            }
        }
    }
    for game in std::iter::once(&diverse).chain(ext.iter()) {
        for p in (0..game.n()).map(PlayerId) {
            if want(AxiomId::NPOPD) {
                out.push(AxiomInstance::NullPlayerOut {
                    game: game.clone(),
                    player: p,
                });
            }
            if want(AxiomId::ND) {
                out.push(AxiomInstance::NullPlayerDiverse {
                    game: game.clone(),
                    player: p,
                });
            }
        }
        for (i, j) in same_block_pairs(game) {
            if want(AxiomId::IBCOPPD) {
                out.push(AxiomInstance::BalancedContributions {
                    game: game.clone(),
                    i,
                    j,
                });
            }
            if want(AxiomId::IBCOPPDMinus) {
                out.push(AxiomInstance::WeakBalancedContributions {
                    game: game.clone(),
                    i,
                    j,
                });
            }
        }
    }
    out
}

fn run_instances(
    f: &ValueFunctional,
    axioms: &[AxiomId],
    instances: Vec<AxiomInstance>,
) -> Vec<CheckReport> {
    let mut reports: Vec<CheckReport> = axioms.iter().map(|&a| CheckReport::empty(a)).collect();
    for instance in instances {
        let outcome = instance.check(f);
        let slot = axioms
            .iter()
            .position(|&a| a == instance.axiom())
            .expect("filtered");
        reports[slot].record(instance, outcome);
    }
    reports
}

/// Runs `trials` random trials and aggregates one report per requested axiom, in the
/// order given. Trial `t` draws from its own ChaCha stream of `seed`, so the result does
/// not depend on scheduling.
pub fn sweep(
    f: &ValueFunctional,
    config: &SweepConfig,
    axioms: &[AxiomId],
    trials: usize,
    seed: u64,
) -> Result<Vec<CheckReport>> {
    if !(0.0..=1.0).contains(&config.density) || config.range < 1 {
        return Err(Error::InvalidSpec(
            "density must lie in [0, 1] and range be ≥ 1".into(),
        ));
    }
    let templates = config.templates()?;
    let rng_for = |stream: u64| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        rng
    };
    let mut reports: Vec<CheckReport> = axioms.iter().map(|&a| CheckReport::empty(a)).collect();
    if let Some(base) = &config.base {
        let mut rng = rng_for(u64::MAX);
        let instances = trial_instances(base, axioms, config.density, config.range, &mut rng);
        for (acc, r) in reports.iter_mut().zip(run_instances(f, axioms, instances)) {
            acc.merge(r);
        }
    }
    let per_trial: Vec<Vec<CheckReport>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = rng_for(t as u64);
            let template = &templates[t % templates.len()];
            let v = sample_game(template, config.density, config.range, false, &mut rng);
            let g = template.with_game(v).expect("same n");
            let instances = trial_instances(&g, axioms, config.density, config.range, &mut rng);
            run_instances(f, axioms, instances)
        })
        .collect();
    for trial in per_trial {
        for (acc, r) in reports.iter_mut().zip(trial) {
            acc.merge(r);
        }
    }
    Ok(reports)
}
