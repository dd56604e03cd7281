//! T-gain view of a mixed graph and switching equivalence.
//!
//! A mixed graph induces the gain function that assigns `1` to both
//! directions of an un-oriented edge, `ω` to the forward direction of an arc
//! and `ω̄` to its reverse, with `ω = (1 + i√3)/2`. Those gains are kept
//! symbolically as [`SixthRoot`]s; arbitrary unit gains ([`UnitComplex`])
//! only show up as intermediates of switching.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{Mul, Neg};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Cycle, EdgeKind, MixedGraph};

/// Unit-modulus tolerance for floating gains.
pub const UNIT_TOLERANCE: f64 = 1e-12;

/// Group operations shared by exact and floating gains.
pub trait Gain: Copy + fmt::Debug + Mul<Output = Self> {
    fn one() -> Self;
    fn minus_one() -> Self;
    fn inverse(self) -> Self;
    fn to_complex(self) -> Complex64;
    /// Exact equality for symbolic gains, 1e-12 for floating ones.
    fn same(self, other: Self) -> bool;
}

/// `e^{iπk/3}` stored as `k mod 6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SixthRoot(u8);

impl SixthRoot {
    pub const ONE: SixthRoot = SixthRoot(0);
    /// `ω = (1 + i√3)/2`
    pub const OMEGA: SixthRoot = SixthRoot(1);
    /// `-ω̄ = (-1 + i√3)/2`
    pub const NEG_OMEGA_BAR: SixthRoot = SixthRoot(2);
    pub const NEG_ONE: SixthRoot = SixthRoot(3);
    /// `-ω = (-1 - i√3)/2`
    pub const NEG_OMEGA: SixthRoot = SixthRoot(4);
    /// `ω̄ = (1 - i√3)/2`
    pub const OMEGA_BAR: SixthRoot = SixthRoot(5);

    pub const ALL: [SixthRoot; 6] = [
        SixthRoot(0),
        SixthRoot(1),
        SixthRoot(2),
        SixthRoot(3),
        SixthRoot(4),
        SixthRoot(5),
    ];

    pub fn from_exponent(k: i64) -> SixthRoot {
        SixthRoot(k.rem_euclid(6) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn conj(self) -> SixthRoot {
        SixthRoot((6 - self.0) % 6)
    }

    pub fn pow(self, e: usize) -> SixthRoot {
        SixthRoot(((self.0 as usize * e) % 6) as u8)
    }

    pub fn classify(self) -> CycleGainClass {
        match self.0 {
            0 => CycleGainClass::Positive,
            3 => CycleGainClass::Negative,
            1 | 5 => CycleGainClass::SemiPositive,
            _ => CycleGainClass::SemiNegative,
        }
    }
}

impl Neg for SixthRoot {
    type Output = SixthRoot;

    fn neg(self) -> SixthRoot {
        SixthRoot((self.0 + 3) % 6)
    }
}

impl Mul for SixthRoot {
    type Output = SixthRoot;
    fn mul(self, rhs: SixthRoot) -> SixthRoot {
        SixthRoot((self.0 + rhs.0) % 6)
    }
}

impl Gain for SixthRoot {
    fn one() -> Self {
        SixthRoot::ONE
    }
    fn minus_one() -> Self {
        SixthRoot::NEG_ONE
    }
    fn inverse(self) -> Self {
        self.conj()
    }
    fn to_complex(self) -> Complex64 {
        // exact components: cos and sin of multiples of π/3
        let h = 0.5;
        let s = 3.0f64.sqrt() / 2.0;
        match self.0 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(h, s),
            2 => Complex64::new(-h, s),
            3 => Complex64::new(-1.0, 0.0),
            4 => Complex64::new(-h, -s),
            _ => Complex64::new(h, -s),
        }
    }
    fn same(self, other: Self) -> bool {
        self == other
    }
}

impl fmt::Display for SixthRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "1",
            1 => "ω",
            2 => "-ω̄",
            3 => "-1",
            4 => "-ω",
            _ => "ω̄",
        })
    }
}

/// A complex number of modulus one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitComplex(Complex64);

impl UnitComplex {
    pub fn new(re: f64, im: f64) -> Result<UnitComplex> {
        let z = Complex64::new(re, im);
        if (z.norm_sqr() - 1.0).abs() > UNIT_TOLERANCE {
            return Err(Error::Unclassified(format!("{re}{im:+}i has modulus != 1")));
        }
        Ok(UnitComplex(z))
    }

    pub fn from_angle(theta: f64) -> UnitComplex {
        UnitComplex(Complex64::from_polar(1.0, theta))
    }

    pub fn re(self) -> f64 {
        self.0.re
    }

    pub fn im(self) -> f64 {
        self.0.im
    }

    pub fn conj(self) -> UnitComplex {
        UnitComplex(self.0.conj())
    }

    /// The sixth root of unity within 1e-12 of this value, if any.
    pub fn to_sixth_root(self) -> Option<SixthRoot> {
        SixthRoot::ALL
            .into_iter()
            .find(|r| (r.to_complex() - self.0).norm() <= UNIT_TOLERANCE)
    }
}

impl From<SixthRoot> for UnitComplex {
    fn from(r: SixthRoot) -> Self {
        UnitComplex(r.to_complex())
    }
}

impl Mul for UnitComplex {
    type Output = UnitComplex;
    fn mul(self, rhs: UnitComplex) -> UnitComplex {
        UnitComplex(self.0 * rhs.0)
    }
}

impl Gain for UnitComplex {
    fn one() -> Self {
        UnitComplex(Complex64::new(1.0, 0.0))
    }
    fn minus_one() -> Self {
        UnitComplex(Complex64::new(-1.0, 0.0))
    }
    fn inverse(self) -> Self {
        self.conj()
    }
    fn to_complex(self) -> Complex64 {
        self.0
    }
    fn same(self, other: Self) -> bool {
        (self.0 - other.0).norm() <= UNIT_TOLERANCE
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CycleGainClass {
    Positive,
    Negative,
    SemiPositive,
    SemiNegative,
}

/// Gains on the oriented edges of an underlying graph, with
/// `gain(j, i) = gain(i, j)^-1`.
#[derive(Debug, Clone)]
pub struct GainView<G: Gain> {
    n: usize,
    pairs: Vec<(usize, usize)>,
    gains: Vec<Option<G>>,
}

impl<G: Gain> GainView<G> {
    /// Build from `(i, j, gain(i, j))` triples; the reverse direction is set
    /// to the inverse.
    pub fn from_gains<I>(n: usize, gains: I) -> Result<GainView<G>>
    where
        I: IntoIterator<Item = (usize, usize, G)>,
    {
        let mut v = GainView {
            n,
            pairs: Vec::new(),
            gains: vec![None; n * n],
        };
        for (i, j, g) in gains {
            for x in [i, j] {
                if x == 0 || x > n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if i == j {
                return Err(Error::SelfLoop(i));
            }
            if v.gains[(i - 1) * n + j - 1].is_some() {
                return Err(Error::DuplicatePair(i.min(j), i.max(j)));
            }
            v.gains[(i - 1) * n + j - 1] = Some(g);
            v.gains[(j - 1) * n + i - 1] = Some(g.inverse());
            v.pairs.push((i.min(j), i.max(j)));
        }
        v.pairs.sort_unstable();
        Ok(v)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Underlying edges as sorted `(i, j)` with `i < j`.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn gain(&self, i: usize, j: usize) -> Option<G> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return None;
        }
        self.gains[(i - 1) * self.n + j - 1]
    }

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n).filter(move |&u| self.gains[(v - 1) * self.n + u - 1].is_some())
    }

    fn same_base(&self, other: &GainView<G>) -> bool {
        self.n == other.n && self.pairs == other.pairs
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![1];
        while let Some(u) = stack.pop() {
            for w in self.neighbors(u) {
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Product of gains along `cycle` in the given traversal direction.
    pub fn cycle_gain(&self, cycle: &[usize]) -> Result<G> {
        let len = cycle.len();
        if len < 3 {
            return Err(Error::NotACycle(format!("{cycle:?} has fewer than 3 vertices")));
        }
        let mut seen = vec![false; self.n + 1];
        for &v in cycle {
            if v == 0 || v > self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotACycle(format!("{cycle:?} repeats vertex {v}")));
            }
        }
        let mut acc = G::one();
        for k in 0..len {
            let (a, b) = (cycle[k], cycle[(k + 1) % len]);
            acc = acc * self.gain(a, b).ok_or(Error::NotAdjacent(a, b))?;
        }
        Ok(acc)
    }

    /// `gain'(i, j) = ζ(i)^-1 · gain(i, j) · ζ(j)`.
    pub fn apply_switching(&self, zeta: &SwitchingFunction<G>) -> Result<GainView<G>> {
        if zeta.0.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                actual: zeta.0.len(),
            });
        }
        let mut gains = self.gains.clone();
        for i in 1..=self.n {
            for j in 1..=self.n {
                let slot = &mut gains[(i - 1) * self.n + j - 1];
                if let Some(g) = *slot {
                    *slot = Some(zeta.at(i).inverse() * g * zeta.at(j));
                }
            }
        }
        Ok(GainView {
            n: self.n,
            pairs: self.pairs.clone(),
            gains,
        })
    }

    /// A switching function (with `ζ(1) = 1`) that turns every gain into
    /// `target`, when one exists. Built by breadth-first propagation from
    /// vertex 1, then checked on every edge.
    pub fn switching_certificate_to_constant(
        &self,
        target: G,
    ) -> Result<Option<SwitchingFunction<G>>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut zeta: Vec<Option<G>> = vec![None; self.n];
        zeta[0] = Some(G::one());
        let mut queue = VecDeque::from([1usize]);
        while let Some(u) = queue.pop_front() {
            let zu = zeta[u - 1].unwrap();
            for w in self.neighbors(u) {
                if zeta[w - 1].is_none() {
                    // ζ(u)^-1 g(u,w) ζ(w) = target  =>  ζ(w) = g(u,w)^-1 ζ(u) target
                    let g = self.gain(u, w).unwrap();
                    zeta[w - 1] = Some(g.inverse() * zu * target);
                    queue.push_back(w);
                }
            }
        }
        let zeta = SwitchingFunction(zeta.into_iter().map(Option::unwrap).collect());
        let switched = self.apply_switching(&zeta)?;
        let ok = switched
            .pairs
            .iter()
            .all(|&(i, j)| switched.gain(i, j).unwrap().same(target));
        Ok(ok.then_some(zeta))
    }

    /// Whether some switching function maps `self` onto `other`.
    pub fn is_switching_equivalent(&self, other: &GainView<G>) -> Result<bool> {
        if !self.same_base(other) {
            return Err(Error::MismatchedGraphs);
        }
        // other = ζ^-1 self ζ  iff  other · self^-1 is balanced
        let quotient = GainView::from_gains(
            self.n,
            self.pairs.iter().map(|&(i, j)| {
                (
                    i,
                    j,
                    other.gain(i, j).unwrap() * self.gain(i, j).unwrap().inverse(),
                )
            }),
        )?;
        Ok(quotient.switching_certificate_to_constant(G::one())?.is_some())
    }

    /// Every cycle has gain 1. Propagates gains along a spanning forest and
    /// checks that every co-tree edge closes with gain 1.
    pub fn is_balanced(&self) -> bool {
        let mut potential: Vec<Option<G>> = vec![None; self.n];
        for root in 1..=self.n {
            if potential[root - 1].is_some() {
                continue;
            }
            potential[root - 1] = Some(G::one());
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let pu = potential[u - 1].unwrap();
                for w in self.neighbors(u) {
                    let g = self.gain(u, w).unwrap();
                    match potential[w - 1] {
                        None => {
                            potential[w - 1] = Some(pu * g);
                            queue.push_back(w);
                        }
                        Some(pw) => {
                            if !(pu * g).same(pw) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    pub fn to_unit_complex(&self) -> GainView<UnitComplex> {
        GainView {
            n: self.n,
            pairs: self.pairs.clone(),
            gains: self
                .gains
                .iter()
                .map(|g| g.map(|g| UnitComplex(g.to_complex())))
                .collect(),
        }
    }
}

impl GainView<SixthRoot> {
    pub fn classify_cycle(&self, cycle: &[usize]) -> Result<CycleGainClass> {
        Ok(self.cycle_gain(cycle)?.classify())
    }
}

impl GainView<UnitComplex> {
    /// Classification is defined only for sixth roots of unity; anything else
    /// is reported as [`Error::Unclassified`].
    pub fn classify_cycle(&self, cycle: &[usize]) -> Result<CycleGainClass> {
        let g = self.cycle_gain(cycle)?;
        g.to_sixth_root()
            .map(SixthRoot::classify)
            .ok_or_else(|| Error::Unclassified(format!("{}{:+}i", g.re(), g.im())))
    }
}

/// Vertex-indexed unit gains; `ζ(v)` is entry `v - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SwitchingFunction<G>(pub Vec<G>);

impl<G: Gain> SwitchingFunction<G> {
    pub fn identity(n: usize) -> Self {
        SwitchingFunction(vec![G::one(); n])
    }

    pub fn at(&self, v: usize) -> G {
        self.0[v - 1]
    }
}

/// The gain view induced by the orientation of `g`.
pub fn gain_view(g: &MixedGraph) -> GainView<SixthRoot> {
    GainView::from_gains(
        g.order(),
        g.edges().iter().map(|e| match e.kind {
            EdgeKind::Unoriented => (e.tail, e.head, SixthRoot::ONE),
            EdgeKind::Arc => (e.tail, e.head, SixthRoot::OMEGA),
        }),
    )
    .expect("a valid mixed graph yields a valid gain view")
}

/// Every cycle of `g` has gain 1; acyclic graphs are positive.
pub fn is_positive_graph(g: &MixedGraph) -> bool {
    gain_view(g).is_balanced()
}

/// `g` is switching equivalent to the constant gain -1.
pub fn is_antibalanced(g: &MixedGraph) -> Result<bool> {
    Ok(gain_view(g)
        .switching_certificate_to_constant(SixthRoot::NEG_ONE)?
        .is_some())
}

/// Class of a cycle given as a [`Cycle`] of `g`.
pub fn classify_cycle(g: &GainView<SixthRoot>, cycle: &Cycle) -> Result<CycleGainClass> {
    g.classify_cycle(cycle.vertices())
}
