//! Exact arithmetic on angles of the circle (0,1], the sector partition,
//! the multiply-by-n shift, itinerary coding and the coding map back to
//! angles. Everything here is rational arithmetic; no floating point.
//!
//! The circle is identified with (0,1], so the point usually written as
//! angle 0 is represented by 1. The partition intervals are
//! `(k/2n, (k+1)/2n]` for indices 0..=n, with the negative-index halves
//! obtained by adding 1/2.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{McmError, Result};

/// Exact rational point of the circle, stored in (0, 1].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Angle(BigRational);

impl Angle {
    /// Reduce an arbitrary rational mod 1 into (0, 1].
    pub fn new(value: BigRational) -> Angle {
        let t = &value - value.floor();
        if t.is_zero() {
            Angle(BigRational::one())
        } else {
            Angle(t)
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Angle {
        assert!(den != 0, "angle denominator must be nonzero");
        Angle::new(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        let num = self.0.numer();
        let den = self.0.denom();
        // Angles live in (0,1]; a plain i128 path covers every denominator
        // that survives reduction in practice, with a string fallback.
        match (i128::try_from(num.clone()), i128::try_from(den.clone())) {
            (Ok(n), Ok(d)) => n as f64 / d as f64,
            _ => self.0.to_string().parse::<f64>().unwrap_or(0.0),
        }
    }

    /// The shift `nθ mod 1`, mapped back into (0, 1].
    pub fn tau(&self, n: u32) -> Angle {
        Angle::new(&self.0 * BigRational::from(BigInt::from(n)))
    }

    /// The antipode θ + 1/2 mod 1.
    pub fn plus_half(&self) -> Angle {
        Angle::new(&self.0 + BigRational::new(BigInt::one(), BigInt::from(2)))
    }

    /// Canonical representative of the cut ray {θ, θ+1/2}: the smaller of
    /// the two points in (0, 1].
    pub fn cut_ray_canonical(&self) -> Angle {
        let other = self.plus_half();
        if other.0 < self.0 {
            other
        } else {
            self.clone()
        }
    }

    /// Parse "p/q" (or a bare integer) as an exact angle.
    pub fn parse(s: &str) -> Result<Angle> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt> {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| McmError::Parse(format!("bad integer in angle: {t:?}")))
        };
        if let Some((p, q)) = s.split_once('/') {
            let num = parse_int(p)?;
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(McmError::Parse("angle denominator is zero".into()));
            }
            Ok(Angle::new(BigRational::new(num, den)))
        } else {
            Ok(Angle::new(BigRational::from(parse_int(s)?)))
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Angle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Angle {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Angle::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// One symbol of the index set {0, n, ±1, .., ±(n−1)}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Symbol(pub i32);

impl Symbol {
    pub fn validate(self, n: u32) -> Result<Symbol> {
        let n = n as i32;
        if (-(n - 1)..=n).contains(&self.0) {
            Ok(self)
        } else {
            Err(McmError::InvalidSymbol(self.0, n as u32))
        }
    }

    /// True when the symbol is one of the coding symbols ±1..±(n−1).
    pub fn is_coding(self, n: u32) -> bool {
        self.0 != 0 && self.0 != n as i32 && self.validate(n).is_ok()
    }

    /// Index of the sector boundary ray: symbols 0..=n map to themselves,
    /// −k maps to n+k, so indices run 0..2n counterclockwise.
    pub fn ray_index(self, n: u32) -> u32 {
        if self.0 >= 0 {
            self.0 as u32
        } else {
            n + self.0.unsigned_abs()
        }
    }

    /// Ray index mod n. Sectors S_k and S_{−k} share this residue, which is
    /// exactly the datum cut-ray membership compares.
    pub fn residue(self, n: u32) -> u32 {
        self.ray_index(n) % n
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The map χ: {0,n,±1,..,±(n−1)} → ℕ used by the coding map.
pub fn chi(k: Symbol, n: u32) -> Result<u32> {
    k.validate(n)?;
    if k.0 >= 0 {
        Ok(k.0 as u32)
    } else {
        Ok(n + k.0.unsigned_abs())
    }
}

/// The shift τ(θ) = nθ mod 1 on (0,1].
pub fn tau(theta: &Angle, n: u32) -> Angle {
    theta.tau(n)
}

/// The unique partition index k with θ ∈ Θ_k = (k/2n, (k+1)/2n]
/// (indices > n wrap to the negative side).
pub fn sector_of_angle(theta: &Angle, n: u32) -> Symbol {
    // θ ∈ (j/2n, (j+1)/2n] ⟺ ceil(2nθ) = j+1.
    let scaled = theta.value() * BigRational::from(BigInt::from(2 * n));
    let j_big = scaled.ceil().to_integer() - BigInt::one();
    let j = u32::try_from(j_big).expect("angle in (0,1] yields index in 0..2n");
    if j <= n {
        Symbol(j as i32)
    } else {
        Symbol(-((j - n) as i32))
    }
}

/// Eventually periodic symbol sequence in closed form. An empty period with
/// `truncated` set means only a finite prefix is known.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Itinerary {
    pub preperiod: Vec<Symbol>,
    pub period: Vec<Symbol>,
    pub truncated: bool,
}

impl Itinerary {
    pub fn periodic(period: Vec<i32>) -> Itinerary {
        Itinerary {
            preperiod: Vec::new(),
            period: period.into_iter().map(Symbol).collect(),
            truncated: false,
        }
    }

    pub fn preperiodic(pre: Vec<i32>, period: Vec<i32>) -> Itinerary {
        Itinerary {
            preperiod: pre.into_iter().map(Symbol).collect(),
            period: period.into_iter().map(Symbol).collect(),
            truncated: false,
        }
    }

    /// Symbol at position k of the infinite expansion. None when only a
    /// truncated prefix is known and k falls past it.
    pub fn symbol_at(&self, k: usize) -> Option<Symbol> {
        if k < self.preperiod.len() {
            Some(self.preperiod[k])
        } else if !self.period.is_empty() {
            Some(self.period[(k - self.preperiod.len()) % self.period.len()])
        } else {
            None
        }
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.preperiod.is_empty() && !self.period.is_empty()
    }

    /// All symbols lie in ±1..±(n−1).
    pub fn is_coding(&self, n: u32) -> bool {
        self.preperiod
            .iter()
            .chain(self.period.iter())
            .all(|s| s.is_coding(n))
    }

    /// The parity rule cutting Σ down to Σ₀: after an even χ the next symbol
    /// is positive, after an odd χ it is negative. Checked over the whole
    /// eventually-periodic expansion (including the period wrap).
    pub fn is_sigma0(&self, n: u32) -> bool {
        if !self.is_coding(n) {
            return false;
        }
        let total = self.preperiod.len() + self.period.len();
        if total == 0 {
            return false;
        }
        let limit = if self.period.is_empty() {
            total - 1
        } else {
            total
        };
        for k in 0..limit {
            let a = self.symbol_at(k).unwrap();
            let b = match self.symbol_at(k + 1) {
                Some(b) => b,
                None => break,
            };
            if !sigma0_step_ok(a, b, n) {
                return false;
            }
        }
        true
    }

    /// Render as "pre|per", e.g. "|1,-1" for the 2-periodic sequence (1,−1).
    pub fn to_compact(&self) -> String {
        let side = |v: &[Symbol]| {
            v.iter()
                .map(|s| s.0.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        format!("{}|{}", side(&self.preperiod), side(&self.period))
    }

    /// Parse the "pre|per" form.
    pub fn parse(s: &str) -> Result<Itinerary> {
        let (pre, per) = s
            .split_once('|')
            .ok_or_else(|| McmError::Parse(format!("itinerary {s:?} is missing '|'")))?;
        let side = |t: &str| -> Result<Vec<Symbol>> {
            if t.trim().is_empty() {
                return Ok(Vec::new());
            }
            t.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<i32>()
                        .map(Symbol)
                        .map_err(|_| McmError::Parse(format!("bad symbol {x:?}")))
                })
                .collect()
        };
        Ok(Itinerary {
            preperiod: side(pre)?,
            period: side(per)?,
            truncated: false,
        })
    }
}

impl fmt::Debug for Itinerary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_compact())
    }
}

fn sigma0_step_ok(a: Symbol, b: Symbol, n: u32) -> bool {
    match chi(a, n) {
        Ok(c) => {
            if c % 2 == 0 {
                b.0 >= 1 && b.0 <= n as i32 - 1
            } else {
                b.0 <= -1 && b.0 >= -(n as i32 - 1)
            }
        }
        Err(_) => false,
    }
}

/// An angle together with its computed coding data.
#[derive(Clone, Debug, Serialize)]
pub struct AngleClass {
    pub theta: Angle,
    pub itinerary: Itinerary,
    /// Orbit never meets the two forbidden intervals (certified exactly for
    /// cycle-closed orbits, else to the verified depth).
    pub in_theta: bool,
    /// First index whose symbol fell in {0, n}, when any did.
    pub offending_index: Option<usize>,
}

/// Compute the itinerary of θ under τ. Rational orbits are finite, so cycle
/// detection yields a closed (preperiod, period) form whenever `depth`
/// reaches the cycle; otherwise the result is a truncated prefix.
pub fn angle_itinerary(theta: &Angle, n: u32, depth: usize) -> AngleClass {
    assert!(depth >= 1, "itinerary depth must be at least 1");
    let mut seen: HashMap<BigRational, usize> = HashMap::new();
    let mut symbols: Vec<Symbol> = Vec::new();
    let mut offending: Option<usize> = None;
    let mut current = theta.clone();
    let mut cycle: Option<(usize, usize)> = None;

    for k in 0..depth {
        if let Some(&start) = seen.get(current.value()) {
            cycle = Some((start, k));
            break;
        }
        seen.insert(current.value().clone(), k);
        let s = sector_of_angle(&current, n);
        if !s.is_coding(n) && offending.is_none() {
            offending = Some(k);
        }
        symbols.push(s);
        current = current.tau(n);
    }

    let itinerary = match cycle {
        Some((start, _)) => Itinerary {
            preperiod: symbols[..start].to_vec(),
            period: symbols[start..].to_vec(),
            truncated: false,
        },
        None => Itinerary {
            preperiod: symbols,
            period: Vec::new(),
            truncated: true,
        },
    };
    AngleClass {
        theta: theta.clone(),
        itinerary,
        in_theta: offending.is_none(),
        offending_index: offending,
    }
}

/// Membership in the angle Cantor set, certified by the closed-form orbit.
pub fn in_theta_set(theta: &Angle, n: u32) -> bool {
    // Any rational orbit closes within denominator(θ)·2n steps; 4096 is far
    // beyond every denominator exercised here, and the cycle check below
    // keeps the answer exact rather than depth-limited.
    let ac = angle_itinerary(theta, n, 4096);
    ac.in_theta && !ac.itinerary.truncated
}

/// The coding map κ(s) = ½(χ(s₀)/n + Σ_{k≥1} |s_k|/n^{k+1}), evaluated in
/// closed form: finite preperiod part plus geometric periodic tail.
pub fn kappa(s: &Itinerary, n: u32) -> Result<Angle> {
    if s.period.is_empty() {
        return Err(McmError::InvalidItinerary(
            "kappa needs an eventually periodic itinerary (nonempty period)".into(),
        ));
    }
    for sym in s.preperiod.iter().chain(s.period.iter()) {
        sym.validate(n)?;
        if !sym.is_coding(n) {
            return Err(McmError::InvalidItinerary(format!(
                "symbol {} lies in {{0, n}}; kappa is defined on coding symbols only",
                sym.0
            )));
        }
    }

    let big = |x: u32| BigRational::from(BigInt::from(x));
    let n_rat = big(n);
    let s0 = s.symbol_at(0).unwrap();
    let mut acc = BigRational::from(BigInt::from(chi(s0, n)?)) / n_rat.clone();

    // Finite part: indices 1..a where a = preperiod length.
    let a = s.preperiod.len();
    let mut npow = n_rat.clone(); // n^(k), running; term k uses n^{k+1}
    for k in 1..a {
        npow *= n_rat.clone();
        let m = s.preperiod[k].0.unsigned_abs();
        acc += big(m) / (npow.clone() * n_rat.clone());
    }

    // Periodic tail starting at index k0 = max(a, 1) with phase j0 inside
    // the period block.
    let k0 = a.max(1);
    let p = s.period.len();
    let j0 = (k0 - a) % p;
    let np = num_traits::pow::pow(n_rat.clone(), p);
    let tail_factor = np.clone() / (np - BigRational::one());
    let mut tail = BigRational::zero();
    let mut denom = num_traits::pow::pow(n_rat.clone(), k0 + 1);
    for m in 0..p {
        let sym = s.period[(j0 + m) % p];
        tail += big(sym.0.unsigned_abs()) / denom.clone();
        denom *= n_rat.clone();
    }
    acc += tail_factor * tail;

    Ok(Angle::new(
        acc / BigRational::from(BigInt::from(2)),
    ))
}

/// First index where the modulus sequences |s_k| of two angles differ.
/// Errors when the angles generate the same cut ray.
pub fn first_divergence(alpha: &Angle, beta: &Angle, n: u32) -> Result<usize> {
    if !in_theta_set(alpha, n) || !in_theta_set(beta, n) {
        return Err(McmError::Refused(
            "first_divergence needs both angles in the Cantor set".into(),
        ));
    }
    let mut seen: HashMap<(BigRational, BigRational), usize> = HashMap::new();
    let mut a = alpha.clone();
    let mut b = beta.clone();
    let mut k = 0usize;
    loop {
        let key = (a.value().clone(), b.value().clone());
        if seen.contains_key(&key) {
            return Err(McmError::SameCutRay);
        }
        seen.insert(key, k);
        let sa = sector_of_angle(&a, n);
        let sb = sector_of_angle(&b, n);
        if sa.0.unsigned_abs() != sb.0.unsigned_abs() {
            return Ok(k);
        }
        a = a.tau(n);
        b = b.tau(n);
        k += 1;
    }
}

/// The admissible-graph angle pool: the two fixed lists for n = 3, 4 and,
/// for n ≥ 5, periodic angles whose symbols stay in ±2..±(n−2), enumerated
/// in (period, string) lexicographic order up to `period_bound`.
pub fn theta_ad(n: u32, period_bound: usize) -> Result<Vec<Angle>> {
    match n {
        0..=2 => Err(McmError::UnsupportedDegree(n)),
        3 => Ok(vec![Angle::from_ratio(1, 4), Angle::from_ratio(1, 2)]),
        4 => Ok(vec![
            Angle::from_ratio(1, 3),
            Angle::from_ratio(2, 3),
            Angle::from_ratio(1, 1),
        ]),
        _ => {
            let mut symbols: Vec<i32> = Vec::new();
            for m in 2..=(n as i32 - 2) {
                symbols.push(-m);
            }
            for m in 2..=(n as i32 - 2) {
                symbols.push(m);
            }
            symbols.sort_unstable();
            let mut out: Vec<Angle> = Vec::new();
            let mut seen: Vec<Angle> = Vec::new();
            for p in 1..=period_bound {
                let mut stack: Vec<Vec<i32>> = vec![Vec::new()];
                while let Some(prefix) = stack.pop() {
                    if prefix.len() == p {
                        let itin = Itinerary::periodic(prefix.clone());
                        if itin.is_sigma0(n) {
                            let theta = kappa(&itin, n)?;
                            if !seen.contains(&theta) {
                                seen.push(theta.clone());
                                out.push(theta);
                            }
                        }
                        continue;
                    }
                    // Depth-first in reverse so pop order is lexicographic.
                    for &s in symbols.iter().rev() {
                        if let Some(&last) = prefix.last() {
                            if !sigma0_step_ok(Symbol(last), Symbol(s), n) {
                                continue;
                            }
                        }
                        let mut next = prefix.clone();
                        next.push(s);
                        stack.push(next);
                    }
                }
            }
            Ok(out)
        }
    }
}

/// Periodic approximant of Lemma-3b type: close the first k symbols of the
/// expansion of θ, repairing the wrap with one extra symbol when the plain
/// closure violates the parity rule. Satisfies |θ − θ_k| ≤ n^{−k}.
pub fn periodic_approximant(theta: &Angle, n: u32, k: usize) -> Result<Angle> {
    assert!(k >= 1);
    let ac = angle_itinerary(theta, n, 4096);
    if !ac.in_theta || ac.itinerary.truncated {
        return Err(McmError::Refused(
            "approximant needs an angle in the Cantor set".into(),
        ));
    }
    let mut word: Vec<i32> = (0..k)
        .map(|i| ac.itinerary.symbol_at(i).unwrap().0)
        .collect();
    let closed = Itinerary::periodic(word.clone());
    if closed.is_sigma0(n) {
        return kappa(&closed, n);
    }
    // Repair: one symbol making both the step from word's end and the wrap
    // back to word's start legal. Both parities of χ exist in each sign, so
    // a repair always exists for n ≥ 3.
    let last = Symbol(*word.last().unwrap());
    let first = Symbol(word[0]);
    for m in 1..(n as i32) {
        for &cand in &[m, -m] {
            let c = Symbol(cand);
            if sigma0_step_ok(last, c, n) && sigma0_step_ok(c, first, n) {
                word.push(cand);
                return kappa(&Itinerary::periodic(word), n);
            }
        }
    }
    Err(McmError::InvalidItinerary(
        "no repair symbol found for periodic closure".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ang(p: i64, q: i64) -> Angle {
        Angle::from_ratio(p, q)
    }

    #[test]
    fn chi_cases() {
        assert_eq!(chi(Symbol(0), 3).unwrap(), 0);
        assert_eq!(chi(Symbol(2), 3).unwrap(), 2);
        assert_eq!(chi(Symbol(-1), 3).unwrap(), 4);
        assert_eq!(chi(Symbol(3), 3).unwrap(), 3);
        assert!(chi(Symbol(4), 3).is_err());
        assert!(chi(Symbol(-3), 3).is_err());
    }

    #[test]
    fn tau_exact() {
        assert_eq!(ang(1, 4).tau(3), ang(3, 4));
        assert_eq!(ang(3, 4).tau(3), ang(1, 4));
        assert_eq!(ang(1, 2).tau(3), ang(1, 2));
        // 1 is the representative of angle 0 and is fixed by every τ.
        assert_eq!(ang(1, 1).tau(4), ang(1, 1));
    }

    #[test]
    fn sector_membership() {
        assert_eq!(sector_of_angle(&ang(1, 4), 3).0, 1);
        assert_eq!(sector_of_angle(&ang(1, 1), 4).0, -3);
        // Right endpoint of Θ_0 = (0, 1/6] belongs to Θ_0.
        assert_eq!(sector_of_angle(&ang(1, 6), 3).0, 0);
        assert_eq!(sector_of_angle(&ang(1, 2), 3).0, 2);
        assert_eq!(sector_of_angle(&ang(3, 4), 3).0, -1);
    }

    #[test]
    fn itineraries_from_paper() {
        let ac = angle_itinerary(&ang(1, 4), 3, 8);
        assert!(ac.in_theta);
        assert_eq!(ac.itinerary, Itinerary::periodic(vec![1, -1]));

        let ac = angle_itinerary(&ang(1, 3), 4, 8);
        assert!(ac.in_theta);
        assert_eq!(ac.itinerary, Itinerary::periodic(vec![2]));

        let ac = angle_itinerary(&ang(1, 12), 3, 8);
        assert!(!ac.in_theta);
        assert_eq!(ac.offending_index, Some(0));
    }

    #[test]
    fn kappa_closed_forms() {
        assert_eq!(
            kappa(&Itinerary::periodic(vec![1, -1]), 3).unwrap(),
            ang(1, 4)
        );
        assert_eq!(kappa(&Itinerary::periodic(vec![2]), 3).unwrap(), ang(1, 2));
        // κ depends only on χ(s₀) and the later moduli.
        assert_eq!(kappa(&Itinerary::periodic(vec![1]), 3).unwrap(), ang(1, 4));
        assert!(kappa(&Itinerary::periodic(vec![0]), 3).is_err());
        assert!(kappa(&Itinerary::preperiodic(vec![1], vec![]), 3).is_err());
    }

    #[test]
    fn kappa_preperiodic_matches_series() {
        // (1,-2 | -1,1): evaluate the series numerically as an oracle.
        let it = Itinerary::preperiodic(vec![1, -2], vec![-1, 1]);
        let exact = kappa(&it, 3).unwrap();
        let mut series = chi(Symbol(1), 3).unwrap() as f64 / 3.0;
        for k in 1..60usize {
            let s = it.symbol_at(k).unwrap();
            series += s.0.unsigned_abs() as f64 / 3f64.powi(k as i32 + 1);
        }
        series *= 0.5;
        assert!((exact.to_f64() - series).abs() < 1e-12);
    }

    #[test]
    fn first_divergence_cases() {
        assert_eq!(first_divergence(&ang(1, 4), &ang(1, 2), 3).unwrap(), 0);
        let alpha1 = kappa(&Itinerary::preperiodic(vec![1, -2], vec![-1, 1]), 3).unwrap();
        assert_eq!(first_divergence(&alpha1, &ang(1, 4), 3).unwrap(), 1);
        let beta2 = kappa(&Itinerary::preperiodic(vec![2, 2, 1, -1], vec![2]), 3).unwrap();
        assert_eq!(first_divergence(&beta2, &ang(1, 2), 3).unwrap(), 2);
        assert!(matches!(
            first_divergence(&ang(1, 2), &ang(1, 2), 3),
            Err(McmError::SameCutRay)
        ));
    }

    #[test]
    fn theta_ad_fixed_lists() {
        assert_eq!(theta_ad(3, 4).unwrap(), vec![ang(1, 4), ang(1, 2)]);
        assert_eq!(
            theta_ad(4, 4).unwrap(),
            vec![ang(1, 3), ang(2, 3), ang(1, 1)]
        );
        assert!(theta_ad(2, 1).is_err());
    }

    #[test]
    fn theta_ad_enumerator_n5() {
        // For n = 5 the period-1 admissible strings are (2), (-2), (3), (-3)
        // filtered by the parity wrap rule: χ(2)=2 even needs a positive
        // successor, so (2) qualifies; (−2) has χ=7 odd needing a negative
        // successor, so it qualifies as well; similarly only one of ±3.
        let list = theta_ad(5, 1).unwrap();
        for theta in &list {
            let ac = angle_itinerary(theta, 5, 16);
            assert!(ac.in_theta);
            assert!(ac.itinerary.is_purely_periodic());
            let s = ac.itinerary.period[0].0.unsigned_abs();
            assert!((2..=3).contains(&s));
        }
        // κ((2̄)) with n = 5: the closed periodic formula gives
        // ½(2/5 + 2/(5·4)) = 1/4, and 1/4 indeed has itinerary (2̄).
        let quarter = ang(1, 4);
        assert!(list.contains(&quarter));
        assert_eq!(
            angle_itinerary(&quarter, 5, 8).itinerary,
            Itinerary::periodic(vec![2])
        );
    }

    #[test]
    fn round_trip_on_theta() {
        for (p, q, n) in [(1i64, 4i64, 3u32), (1, 2, 3), (1, 3, 4), (2, 3, 4), (1, 1, 4)] {
            let theta = ang(p, q);
            let ac = angle_itinerary(&theta, n, 64);
            assert!(ac.in_theta);
            assert_eq!(kappa(&ac.itinerary, n).unwrap(), theta);
        }
    }

    #[test]
    fn approximant_error_bound() {
        let theta = ang(1, 4);
        for k in 1..10usize {
            let approx = periodic_approximant(&theta, 3, k).unwrap();
            let err = (theta.value() - approx.value()).abs();
            let bound = BigRational::new(BigInt::one(), BigInt::from(3).pow(k as u32));
            assert!(err <= bound, "k={k}: {err} > {bound}");
            assert!(in_theta_set(&approx, 3));
        }
    }

    #[test]
    fn itinerary_compact_form() {
        let it = Itinerary::periodic(vec![1, -1]);
        assert_eq!(it.to_compact(), "|1,-1");
        assert_eq!(Itinerary::parse("|1,-1").unwrap(), it);
        let it = Itinerary::preperiodic(vec![2, 2], vec![-1]);
        assert_eq!(it.to_compact(), "2,2|-1");
        assert_eq!(Itinerary::parse("2,2|-1").unwrap(), it);
    }
}
