//! Numerics of f(z) = z^n + λ/z^n: critical data, Green function, Böttcher
//! coordinate, sector coding, inverse branches, periodic points, and the
//! escape-trichotomy classifier with its parameter-plane survey.

use num_complex::Complex64;
use serde::Serialize;

use crate::angle::Symbol;
use crate::error::{McmError, Result};

pub const TAU: f64 = std::f64::consts::TAU;

pub fn cis(t: f64) -> Complex64 {
    Complex64::new(t.cos(), t.sin())
}

/// Wrap an angle difference into (−π, π].
pub fn wrap_pi(mut x: f64) -> f64 {
    while x > std::f64::consts::PI {
        x -= TAU;
    }
    while x <= -std::f64::consts::PI {
        x += TAU;
    }
    x
}

/// Sector identifier; reuses the symbol alphabet (0 and n denote the two
/// sectors adjacent to the critical value rays).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SectorId(pub Symbol);

/// Escape-trichotomy classification tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EscapeTag {
    CantorSet,
    CantorCircles,
    Sierpinski,
    Connected,
    Indeterminate,
}

#[derive(Clone, Debug, Serialize)]
pub struct EscapeClass {
    pub tag: EscapeTag,
    pub first_escape_iterate: Option<u32>,
    pub certificate: String,
}

/// Parameter (λ, n) plus derived critical data. Immutable; construct once
/// and share freely across threads.
#[derive(Clone, Debug)]
pub struct ParamContext {
    pub lambda: Complex64,
    pub n: u32,
    /// 2n-th root of λ on the branch that is real positive for real λ > 0.
    pub c0: Complex64,
    pub critical_points: Vec<Complex64>,
    pub v_plus: Complex64,
    pub v_minus: Complex64,
    /// Certified doubling radius: |z| ≥ R implies |f(z)| ≥ 2|z|.
    pub escape_radius: f64,
    /// Equipotential level used for sector truncation and ray seeding.
    pub green_level_v: f64,
}

impl ParamContext {
    pub fn new(lambda: Complex64, n: u32) -> Result<ParamContext> {
        if n < 3 {
            return Err(McmError::UnsupportedDegree(n));
        }
        if lambda.norm() == 0.0 || !lambda.is_finite() {
            return Err(McmError::ZeroLambda);
        }
        let arg = lambda.arg();
        let modulus = lambda.norm();
        let c0 = Complex64::from_polar(modulus.powf(1.0 / (2.0 * n as f64)), arg / (2.0 * n as f64));
        let critical_points: Vec<Complex64> = (0..2 * n)
            .map(|k| c0 * cis(k as f64 * std::f64::consts::PI / n as f64))
            .collect();
        let v_plus = 2.0 * Complex64::from_polar(modulus.sqrt(), arg / 2.0);
        let v_minus = -v_plus;

        // Smallest R ≥ 2 with R ≥ (2|λ|)^{1/2n} and R^n − |λ|/R^n ≥ 2R.
        // The defect is monotone in R past the first condition, so a
        // multiplicative search terminates.
        let mut r = 2f64.max((2.0 * modulus).powf(1.0 / (2.0 * n as f64)));
        for _ in 0..20_000 {
            if r.powi(n as i32) - modulus / r.powi(n as i32) >= 2.0 * r {
                break;
            }
            r *= 1.02;
        }

        let ctx = ParamContext {
            lambda,
            n,
            c0,
            critical_points,
            v_plus,
            v_minus,
            escape_radius: r,
            green_level_v: 1.0,
        };
        debug_assert!(ctx
            .critical_points
            .iter()
            .all(|c| (c.powu(2 * n) - lambda).norm() <= 1e-8 * (1.0 + modulus)));
        Ok(ctx)
    }

    pub fn with_green_level(mut self, v: f64) -> ParamContext {
        assert!(v > 0.0);
        self.green_level_v = v;
        self
    }

    /// λ lies in the open parameter sector where the sector coding applies.
    pub fn in_h(&self) -> bool {
        let a = self.lambda.arg();
        a > 0.0 && a < TAU / (self.n as f64 - 1.0)
    }

    pub fn is_real_positive(&self) -> bool {
        self.lambda.im == 0.0 && self.lambda.re > 0.0
    }

    /// Sector-coding operations are defined inside the parameter sector and
    /// along the real-positive boundary path.
    pub fn coding_allowed(&self) -> bool {
        self.in_h() || self.is_real_positive()
    }

    pub fn require_coding(&self) -> Result<()> {
        if self.coding_allowed() {
            Ok(())
        } else {
            Err(McmError::OutsideCodingDomain(format!(
                "arg λ = {:.6} not in (0, 2π/(n−1)) and λ not real positive",
                self.lambda.arg()
            )))
        }
    }

    /// f(z) = z^n + λ/z^n on the extended plane (0 and ∞ map to ∞).
    pub fn f(&self, z: Complex64) -> Complex64 {
        if z.norm() == 0.0 || !z.is_finite() {
            return Complex64::new(f64::INFINITY, 0.0);
        }
        let zn = z.powu(self.n);
        zn + self.lambda / zn
    }

    /// f'(z) = n(z^{2n} − λ)/z^{n+1}.
    pub fn f_prime(&self, z: Complex64) -> Complex64 {
        let n = self.n as f64;
        n * (z.powu(2 * self.n) - self.lambda) / z.powu(self.n + 1)
    }

    /// Working ray/seeding level; kept above the certified escape radius so
    /// the Böttcher series always converges where rays are seeded.
    pub fn working_level(&self) -> f64 {
        self.green_level_v.max(self.escape_radius.ln() + 0.25)
    }

    /// Angular sector of a point: the index k with z ∈ S_k, plus a flag for
    /// points within `tol` radians of a critical ray. Ties resolve to the
    /// counterclockwise sector.
    pub fn sector_of_point_tol(&self, z: Complex64, tol: f64) -> (SectorId, bool) {
        let step = std::f64::consts::PI / self.n as f64;
        let mut a = z.arg() - self.c0.arg();
        a -= (a / TAU).floor() * TAU; // into [0, 2π)
        let m_near = (a / step).round() as i64;
        let dist = (a - m_near as f64 * step).abs();
        let j = if dist < tol {
            (m_near.rem_euclid(2 * self.n as i64)) as u32
        } else {
            (a / step).floor() as u32 % (2 * self.n)
        };
        let sym = if j <= self.n {
            Symbol(j as i32)
        } else {
            Symbol(-((j - self.n) as i32))
        };
        (SectorId(sym), dist < tol)
    }

    pub fn sector_of_point(&self, z: Complex64) -> (SectorId, bool) {
        self.sector_of_point_tol(z, 1e-12)
    }

    /// The 2n-th roots of unity (the rotational symmetry group of J).
    pub fn omega_roots(&self) -> Vec<Complex64> {
        (0..2 * self.n)
            .map(|k| cis(k as f64 * std::f64::consts::PI / self.n as f64))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GreenResult {
    Escaping { value: f64, first_escape: u32 },
    NotEscaping,
    Indeterminate,
}

impl GreenResult {
    pub fn value(&self) -> Option<f64> {
        match self {
            GreenResult::Escaping { value, .. } => Some(*value),
            _ => None,
        }
    }
}

/// Green function by escape refinement: once the orbit passes the certified
/// radius, G = n^{−k} log|f^k(z)| plus a geometric stack of corrections.
pub fn green(ctx: &ParamContext, z: Complex64, budget: u32, tol: f64) -> GreenResult {
    assert!(tol > 0.0);
    if z.norm() == 0.0 || !z.is_finite() {
        return GreenResult::Escaping {
            value: f64::INFINITY,
            first_escape: 0,
        };
    }
    let mut w = z;
    let mut k: u32 = 0;
    while w.norm() <= ctx.escape_radius {
        if k >= budget {
            // Distinguish a comfortably bounded orbit from one hovering at
            // the escape threshold when the budget ran out.
            return if w.norm() > 0.5 * ctx.escape_radius {
                GreenResult::Indeterminate
            } else {
                GreenResult::NotEscaping
            };
        }
        w = ctx.f(w);
        k += 1;
        if !w.is_finite() {
            // Passed through the pole: the grand orbit of ∞.
            return GreenResult::Escaping {
                value: f64::INFINITY,
                first_escape: k,
            };
        }
    }
    let first_escape = k;
    let nf = ctx.n as f64;
    let mut g = w.norm().ln() * nf.powi(-(k as i32));
    // log|f(w)| = n log|w| + log|1 + λ w^{−2n}|; push corrections until
    // they drop below tol (they decay faster than 4^{-2n} per step).
    for _ in 0..64 {
        let corr_mag = ctx.lambda.norm() / w.norm().powi(2 * ctx.n as i32);
        if !corr_mag.is_finite() || corr_mag < tol * nf.powi(k as i32) || corr_mag < 1e-300 {
            break;
        }
        let ratio = Complex64::new(1.0, 0.0) + ctx.lambda / w.powu(2 * ctx.n);
        g += ratio.norm().ln() * nf.powi(-(k as i32 + 1));
        w = ctx.f(w);
        k += 1;
        if !w.is_finite() {
            break;
        }
    }
    GreenResult::Escaping {
        value: g,
        first_escape,
    }
}

/// log φ and its z-derivative, for Newton steps on (G, arg φ). Only valid
/// outside the certified escape radius. The real part is G, the imaginary
/// part is arg φ up to the ambiguity of the principal log of z.
pub fn log_bottcher_with_derivative(
    ctx: &ParamContext,
    z: Complex64,
    tol: f64,
) -> Result<(Complex64, Complex64)> {
    if z.norm() <= ctx.escape_radius {
        return Err(McmError::NotEscaping(format!(
            "|z| = {:.3} inside certified radius {:.3}",
            z.norm(),
            ctx.escape_radius
        )));
    }
    let nf = ctx.n as f64;
    let mut log_phi = z.ln();
    let mut dlog = 1.0 / z;
    let mut w = z;
    let mut dw = Complex64::new(1.0, 0.0); // (f^k)'(z)
    for k in 0..96u32 {
        let w2n = w.powu(2 * ctx.n);
        let ratio = Complex64::new(1.0, 0.0) + ctx.lambda / w2n;
        let scale = nf.powi(-(k as i32 + 1));
        log_phi += ratio.ln() * scale;
        let dr = -2.0 * nf * ctx.lambda / (w2n * w) * dw / ratio;
        dlog += dr * scale;
        if (ctx.lambda.norm() / w2n.norm()) * scale < tol * 1e-2 {
            break;
        }
        dw *= ctx.f_prime(w);
        w = ctx.f(w);
        if !w.is_finite() || !dw.is_finite() {
            break;
        }
    }
    Ok((log_phi, dlog))
}

/// Böttcher coordinate φ(z), tangent to the identity at ∞.
pub fn bottcher(ctx: &ParamContext, z: Complex64, tol: f64) -> Result<Complex64> {
    let (log_phi, _) = log_bottcher_with_derivative(ctx, z, tol)?;
    // exp removes the branch ambiguity carried by the principal log of z.
    Ok(log_phi.exp())
}

/// Solve φ(z) = exp(g + 2πiθ) by Newton on log φ, with the angular residual
/// wrapped so the branch of arg never matters.
pub fn bottcher_newton(
    ctx: &ParamContext,
    g_target: f64,
    angle_target: f64,
    seed: Complex64,
    tol: f64,
) -> Result<Complex64> {
    let mut z = seed;
    for _ in 0..60 {
        let (log_phi, dlog) = log_bottcher_with_derivative(ctx, z, tol * 1e-3)?;
        let resid = Complex64::new(
            log_phi.re - g_target,
            wrap_pi(log_phi.im - angle_target),
        );
        if resid.norm() < tol {
            return Ok(z);
        }
        let step = resid / dlog;
        // Damp oversized steps so the iterate cannot tunnel inside the
        // certified radius where the series is invalid.
        let max_step = 0.5 * z.norm();
        let step = if step.norm() > max_step {
            step * (max_step / step.norm())
        } else {
            step
        };
        z -= step;
        if z.norm() <= ctx.escape_radius {
            z *= 1.05 * ctx.escape_radius / z.norm();
        }
    }
    Err(McmError::NewtonFailure(format!(
        "Böttcher Newton stalled at level {g_target:.4}, angle {angle_target:.4}"
    )))
}

fn dist_to_value_ray(w: Complex64, v: Complex64) -> f64 {
    // Distance from w to the ray {t v : t ≥ 1}.
    let vn2 = v.norm_sqr();
    let s = (w * v.conj()).re / vn2;
    if s <= 1.0 {
        (w - v).norm()
    } else {
        (w - v * s).norm()
    }
}

/// Candidates z with f(z) = w: n-th roots of the two roots of
/// u² − wu + λ = 0, computed with the cancellation-safe pairing.
pub fn preimages(ctx: &ParamContext, w: Complex64) -> Vec<Complex64> {
    let d = (w * w - 4.0 * ctx.lambda).sqrt();
    let u_big = if (w + d).norm() >= (w - d).norm() {
        (w + d) / 2.0
    } else {
        (w - d) / 2.0
    };
    let u_small = ctx.lambda / u_big;
    let mut out = Vec::with_capacity(2 * ctx.n as usize);
    for u in [u_big, u_small] {
        if u.norm() == 0.0 {
            continue;
        }
        let r = u.norm().powf(1.0 / ctx.n as f64);
        let base = u.arg() / ctx.n as f64;
        for j in 0..ctx.n {
            out.push(Complex64::from_polar(r, base + j as f64 * TAU / ctx.n as f64));
        }
    }
    out
}

/// The inverse branch landing in the sector with the given ray index
/// (0..2n). Boundary candidates are accepted when the critical ray they sit
/// on borders the requested sector.
pub fn inverse_branch_indexed(ctx: &ParamContext, idx: u32, w: Complex64) -> Result<Complex64> {
    let idx = idx % (2 * ctx.n);
    let step = std::f64::consts::PI / ctx.n as f64;
    let mut best: Option<(f64, Complex64)> = None;
    for z in preimages(ctx, w) {
        let mut a = z.arg() - ctx.c0.arg();
        a -= (a / TAU).floor() * TAU;
        // Signed angular position relative to the requested sector's span
        // [idx·step, (idx+1)·step]; accept within a hair of the boundary.
        let lo = idx as f64 * step;
        let mut rel = a - lo;
        rel -= (rel / TAU).floor() * TAU;
        let interior = rel <= step + 1e-9 || rel >= TAU - 1e-9;
        if !interior {
            continue;
        }
        let resid = (ctx.f(z) - w).norm();
        if best.map_or(true, |(r, _)| resid < r) {
            best = Some((resid, z));
        }
    }
    match best {
        Some((resid, z)) if resid <= 1e-6 * (1.0 + w.norm()) => Ok(z),
        Some(_) | None => Err(McmError::BranchInconsistency),
    }
}

/// Inverse branch h_k into the interior of sector S_k, k ∈ ±1..±(n−1).
/// Errors when w sits on a critical value ray (the branch cut) or no
/// candidate lands in the requested sector.
pub fn inverse_branch(ctx: &ParamContext, k: Symbol, w: Complex64) -> Result<Complex64> {
    if !k.is_coding(ctx.n) {
        return Err(McmError::InvalidSymbol(k.0, ctx.n));
    }
    let cut_tol = 1e-12 * (1.0 + w.norm());
    if dist_to_value_ray(w, ctx.v_plus) < cut_tol || dist_to_value_ray(w, ctx.v_minus) < cut_tol {
        return Err(McmError::BranchCut);
    }
    inverse_branch_indexed(ctx, k.ray_index(ctx.n), w)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OrbitStop {
    Depth,
    /// Iterate hit 0 or ∞ (grand orbit of infinity) at this index.
    GrandOrbit(usize),
    /// Iterate entered S_0 or S_n at this index (outside the coding alphabet).
    LeftCoding(usize),
    /// Iterate landed on a critical ray within tolerance.
    Boundary(usize),
    /// Iterate left the working equipotential annulus outward.
    Escaped(usize),
}

#[derive(Clone, Debug, Serialize)]
pub struct PointItinerary {
    pub symbols: Vec<Symbol>,
    pub stop: OrbitStop,
}

/// Sector symbols along the orbit of z, stopping with a flag at the grand
/// orbit of ∞, at the two non-coding sectors, or on escape.
pub fn point_itinerary(ctx: &ParamContext, z: Complex64, depth: usize) -> Result<PointItinerary> {
    ctx.require_coding()?;
    let r_stop = (ctx.n as f64 * ctx.working_level()).exp() * 2.0;
    let mut symbols = Vec::with_capacity(depth);
    let mut w = z;
    let mut stop = OrbitStop::Depth;
    for k in 0..depth {
        if w.norm() < 1e-14 || !w.is_finite() || w.norm() > 1e14 {
            stop = OrbitStop::GrandOrbit(k);
            break;
        }
        if w.norm() > r_stop {
            stop = OrbitStop::Escaped(k);
            break;
        }
        let (sector, on_boundary) = ctx.sector_of_point_tol(w, 1e-11);
        symbols.push(sector.0);
        if !sector.0.is_coding(ctx.n) {
            stop = OrbitStop::LeftCoding(k);
            break;
        }
        if on_boundary {
            stop = OrbitStop::Boundary(k);
            break;
        }
        w = ctx.f(w);
    }
    Ok(PointItinerary { symbols, stop })
}

#[derive(Clone, Debug, Serialize)]
pub struct PeriodicPoint {
    pub point: (f64, f64),
    pub multiplier_abs: f64,
    pub residual: f64,
    pub contraction_steps: u32,
}

impl PeriodicPoint {
    pub fn z(&self) -> Complex64 {
        Complex64::new(self.point.0, self.point.1)
    }
}

/// The unique bounded orbit with a prescribed purely periodic coding
/// itinerary: fixed point of the inverse-branch composition, found by
/// contraction and polished by Newton on f^p(z) − z.
pub fn periodic_point(
    ctx: &ParamContext,
    symbols: &[Symbol],
    tol: f64,
) -> Result<PeriodicPoint> {
    ctx.require_coding()?;
    if symbols.is_empty() {
        return Err(McmError::InvalidItinerary("empty period".into()));
    }
    for s in symbols {
        if !s.is_coding(ctx.n) {
            return Err(McmError::InvalidItinerary(format!(
                "symbol {} outside coding alphabet",
                s.0
            )));
        }
    }
    let step = std::f64::consts::PI / ctx.n as f64;
    let mid = ctx.c0.arg() + (symbols[0].ray_index(ctx.n) as f64 + 0.5) * step;
    let mut z = Complex64::from_polar(ctx.c0.norm().max(0.5), mid);
    let mut steps = 0u32;
    let mut displacement = f64::INFINITY;
    for _ in 0..400 {
        let mut w = z;
        for s in symbols.iter().rev() {
            w = inverse_branch_indexed(ctx, s.ray_index(ctx.n), w)?;
        }
        displacement = (w - z).norm();
        z = w;
        steps += 1;
        if displacement < tol.max(1e-13) {
            break;
        }
    }
    if displacement > 1e-6 {
        return Err(McmError::NumericFailure(format!(
            "inverse-branch contraction stalled (displacement {displacement:.3e}); \
             λ may be too close to the sector boundary"
        )));
    }
    // Newton polish on F(z) = f^p(z) − z.
    let p = symbols.len();
    for _ in 0..30 {
        let (fp, dfp) = iterate_with_derivative(ctx, z, p);
        let f_res = fp - z;
        let d = dfp - Complex64::new(1.0, 0.0);
        if d.norm() == 0.0 {
            break;
        }
        let step = f_res / d;
        z -= step;
        if step.norm() < 1e-14 * (1.0 + z.norm()) {
            break;
        }
    }
    let (fp, dfp) = iterate_with_derivative(ctx, z, p);
    let residual = (fp - z).norm();
    Ok(PeriodicPoint {
        point: (z.re, z.im),
        multiplier_abs: dfp.norm(),
        residual,
        contraction_steps: steps,
    })
}

/// (f^p(z), (f^p)'(z)).
pub fn iterate_with_derivative(ctx: &ParamContext, z: Complex64, p: usize) -> (Complex64, Complex64) {
    let mut w = z;
    let mut dw = Complex64::new(1.0, 0.0);
    for _ in 0..p {
        dw *= ctx.f_prime(w);
        w = ctx.f(w);
    }
    (w, dw)
}

/// Options for the escape classifier's sampled path certificates.
#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    pub budget: u32,
    /// Samples per certified path.
    pub path_density: u32,
    /// Greatest forward iterate probed for a trap-door hit.
    pub max_escape_search: u32,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            budget: 1024,
            path_density: 256,
            max_escape_search: 64,
        }
    }
}

/// Certify x in the immediate basin of ∞: every sample on the radial path
/// from x out to the certified radius escapes.
pub fn certify_basin(ctx: &ParamContext, x: Complex64, opts: &ClassifyOptions) -> bool {
    if !x.is_finite() || x.norm() >= ctx.escape_radius {
        return x.norm() > 0.0;
    }
    if x.norm() == 0.0 {
        return false;
    }
    let m = opts.path_density.max(2);
    let ratio = ctx.escape_radius / x.norm();
    for i in 0..=m {
        let p = x * ratio.powf(i as f64 / m as f64);
        match green(ctx, p, opts.budget, 1e-9) {
            GreenResult::Escaping { .. } => {}
            _ => return false,
        }
    }
    true
}

/// Certify x in the trap door: every sample on the segment from x to 0 has
/// its image certified in the basin of ∞ (near 0 this holds trivially).
pub fn certify_trap_door(ctx: &ParamContext, x: Complex64, opts: &ClassifyOptions) -> bool {
    if x.norm() == 0.0 {
        return true;
    }
    if !x.is_finite() {
        return false;
    }
    let m = opts.path_density.max(2);
    for i in 0..m {
        let p = x * (1.0 - i as f64 / m as f64);
        if p.norm() == 0.0 {
            continue;
        }
        let fp = ctx.f(p);
        if fp.norm() >= ctx.escape_radius {
            continue;
        }
        if !certify_basin(ctx, fp, opts) {
            return false;
        }
    }
    true
}

/// The Escape Trichotomy: decide where the free critical value escapes
/// (immediate basin, trap door, or a forward iterate into the trap door)
/// or report a bounded critical orbit. Certificates are sampled paths;
/// failures yield an Indeterminate tag, never a guess.
pub fn classify_escape(ctx: &ParamContext, opts: &ClassifyOptions) -> EscapeClass {
    let v = ctx.v_plus;
    match green(ctx, v, opts.budget, 1e-9) {
        GreenResult::NotEscaping => {
            return EscapeClass {
                tag: EscapeTag::Connected,
                first_escape_iterate: None,
                certificate: format!("critical orbit bounded through {} iterates", opts.budget),
            }
        }
        GreenResult::Indeterminate => {
            return EscapeClass {
                tag: EscapeTag::Indeterminate,
                first_escape_iterate: None,
                certificate: "orbit hovered at the escape threshold; budget exhausted".into(),
            }
        }
        GreenResult::Escaping { .. } => {}
    }
    if certify_basin(ctx, v, opts) {
        return EscapeClass {
            tag: EscapeTag::CantorSet,
            first_escape_iterate: None,
            certificate: format!(
                "radial path v+ → |z| = {:.3} fully escaping ({} samples)",
                ctx.escape_radius, opts.path_density
            ),
        };
    }
    if certify_trap_door(ctx, v, opts) {
        return EscapeClass {
            tag: EscapeTag::CantorCircles,
            first_escape_iterate: Some(0),
            certificate: format!(
                "segment v+ → 0 maps into the basin ({} samples)",
                opts.path_density
            ),
        };
    }
    let mut w = v;
    for k in 1..=opts.max_escape_search {
        w = ctx.f(w);
        if !w.is_finite() {
            break;
        }
        if w.norm() >= ctx.escape_radius {
            // Reached the basin without a trap-door hit: certificates
            // disagree with the escape route.
            break;
        }
        if certify_trap_door(ctx, w, opts) {
            return EscapeClass {
                tag: EscapeTag::Sierpinski,
                first_escape_iterate: Some(k),
                certificate: format!("f^{k}(v+) certified in the trap door"),
            };
        }
    }
    EscapeClass {
        tag: EscapeTag::Indeterminate,
        first_escape_iterate: None,
        certificate: "escaping orbit but no path certificate succeeded at this density".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::{angle_itinerary, Angle};

    fn ctx(re: f64, im: f64, n: u32) -> ParamContext {
        ParamContext::new(Complex64::new(re, im), n).unwrap()
    }

    #[test]
    fn f_eval_basics() {
        let c = ctx(1.0, 0.0, 3);
        assert!((c.f(Complex64::new(1.0, 0.0)) - Complex64::new(2.0, 0.0)).norm() < 1e-15);
        // i³ = −i and 0.1/i³ = 0.1 i⁻³·… direct arithmetic gives −1.1 i.
        let c = ctx(0.1, 0.0, 3);
        let got = c.f(Complex64::new(0.0, 1.0));
        assert!((got - Complex64::new(0.0, -1.1)).norm() < 1e-12);
        // Critical points with even index map to v+.
        let c = ctx(0.3, 0.4, 4);
        for k in (0..8).step_by(2) {
            assert!((c.f(c.critical_points[k]) - c.v_plus).norm() < 1e-10);
        }
        for k in (1..8).step_by(2) {
            assert!((c.f(c.critical_points[k]) - c.v_minus).norm() < 1e-10);
        }
    }

    #[test]
    fn escape_radius_doubles() {
        for lam in [0.2, 10.0, 1e-4, 250.0] {
            let c = ctx(lam, lam / 3.0, 3);
            let r = c.escape_radius;
            for t in [1.0, 1.5, 8.0] {
                let z = Complex64::from_polar(r * t, 0.77);
                assert!(c.f(z).norm() >= 2.0 * z.norm() * 0.999);
            }
        }
    }

    #[test]
    fn green_near_infinity_is_log() {
        let c = ctx(1.0, 0.0, 3);
        let z = Complex64::new(1e6, 0.0);
        let g = green(&c, z, 100, 1e-12).value().unwrap();
        assert!((g - z.norm().ln()).abs() / z.norm().ln() < 1e-6);
    }

    #[test]
    fn green_functional_equation() {
        let c = ctx(0.3, 0.2, 3);
        for seed in [
            Complex64::new(2.5, 0.3),
            Complex64::new(0.1, 2.2),
            Complex64::new(-3.0, 1.0),
        ] {
            let g = green(&c, seed, 200, 1e-12).value().unwrap();
            let gf = green(&c, c.f(seed), 200, 1e-12).value().unwrap();
            assert!((gf - 3.0 * g).abs() < 1e-9, "G(f z) = 3 G(z) failed");
        }
    }

    #[test]
    fn green_symmetry_under_rotation() {
        let c = ctx(0.3, 0.2, 3);
        let z = Complex64::new(2.0, 1.0);
        let g = green(&c, z, 200, 1e-12).value().unwrap();
        for w in c.omega_roots() {
            let gw = green(&c, w * z, 200, 1e-12).value().unwrap();
            assert!((g - gw).abs() < 1e-10);
        }
    }

    #[test]
    fn bottcher_tangent_to_identity() {
        let c = ctx(1.0, 0.0, 3);
        let z = Complex64::new(1e8, 3.0);
        let phi = bottcher(&c, z, 1e-12).unwrap();
        assert!((phi - z).norm() / z.norm() < 1e-7);
    }

    #[test]
    fn bottcher_equivariance_and_modulus() {
        let c = ctx(0.2, 0.2, 3);
        let z = Complex64::from_polar(3.0, 0.4);
        let phi = bottcher(&c, z, 1e-12).unwrap();
        let g = green(&c, z, 200, 1e-12).value().unwrap();
        assert!((phi.norm() - g.exp()).abs() < 1e-8);
        for w in c.omega_roots() {
            let pw = bottcher(&c, w * z, 1e-12).unwrap();
            assert!((pw - w * phi).norm() < 1e-8);
        }
    }

    #[test]
    fn sector_of_critical_values() {
        let c = ctx(0.5, 0.0, 3);
        let (s, _) = c.sector_of_point(c.v_plus);
        assert_eq!(s.0, Symbol(0));
        let (s, _) = c.sector_of_point(c.v_minus);
        assert_eq!(s.0, Symbol(3));
        // Interior symmetry S_{−k} = −S_k.
        let c = ctx(0.3, 0.25, 3);
        let z = Complex64::from_polar(1.0, c.c0.arg() + 1.5 * std::f64::consts::PI / 3.0);
        let (s, _) = c.sector_of_point(z);
        let (sm, _) = c.sector_of_point(-z);
        assert_eq!(s.0 .0, 1);
        assert_eq!(sm.0 .0, -1);
    }

    #[test]
    fn preimage_completeness() {
        let c = ctx(0.23, 0.31, 3);
        let w = Complex64::new(1.7, -0.4);
        let pre = preimages(&c, w);
        assert_eq!(pre.len(), 6);
        for z in &pre {
            assert!((c.f(*z) - w).norm() < 1e-9 * (1.0 + w.norm()));
        }
        // Pairwise distinct for generic w.
        for i in 0..pre.len() {
            for j in i + 1..pre.len() {
                assert!((pre[i] - pre[j]).norm() > 1e-8);
            }
        }
    }

    #[test]
    fn inverse_branch_right_inverse() {
        let c = ctx(0.2, 0.2, 3);
        let w = Complex64::new(0.9, 1.2);
        for k in [1i32, 2, -1, -2] {
            let z = inverse_branch(&c, Symbol(k), w).unwrap();
            assert!((c.f(z) - w).norm() < 1e-10);
            let (s, _) = c.sector_of_point(z);
            assert_eq!(s.0, Symbol(k));
        }
        // Odd n: f is odd, so h_{−k} = −h_k.
        let z1 = inverse_branch(&c, Symbol(2), w).unwrap();
        let z2 = inverse_branch(&c, Symbol(-2), w).unwrap();
        assert!((z1 + z2).norm() < 1e-10);
    }

    #[test]
    fn inverse_branch_rejects_cut() {
        let c = ctx(0.2, 0.2, 3);
        let w = c.v_plus * 1.5;
        assert!(matches!(
            inverse_branch(&c, Symbol(1), w),
            Err(McmError::BranchCut)
        ));
    }

    #[test]
    fn periodic_point_repelling() {
        let lam = Complex64::from_polar(0.2, std::f64::consts::FRAC_PI_4);
        let c = ParamContext::new(lam, 3).unwrap();
        let pp = periodic_point(&c, &[Symbol(2)], 1e-12).unwrap();
        assert!(pp.residual < 1e-10);
        assert!(pp.multiplier_abs > 1.0);
        let it = point_itinerary(&c, pp.z(), 8).unwrap();
        assert_eq!(it.stop, OrbitStop::Depth);
        assert!(it.symbols.iter().all(|s| *s == Symbol(2)));
        // Odd n: mirrored itinerary gives the mirrored point.
        let pm = periodic_point(&c, &[Symbol(-2)], 1e-12).unwrap();
        assert!((pm.z() + pp.z()).norm() < 1e-9);
    }

    #[test]
    fn point_itinerary_shift_property() {
        let lam = Complex64::from_polar(0.2, std::f64::consts::FRAC_PI_4);
        let c = ParamContext::new(lam, 3).unwrap();
        let pp = periodic_point(&c, &[Symbol(1), Symbol(-1)], 1e-12).unwrap();
        let a = point_itinerary(&c, pp.z(), 6).unwrap();
        let b = point_itinerary(&c, c.f(pp.z()), 5).unwrap();
        assert_eq!(&a.symbols[1..], &b.symbols[..]);
    }

    #[test]
    fn landing_itinerary_matches_angle_itinerary() {
        // The rotated-partition check: ray-point itineraries agree with the
        // symbolic itinerary of the angle.
        let lam = Complex64::from_polar(0.2, std::f64::consts::FRAC_PI_4);
        let c = ParamContext::new(lam, 3).unwrap();
        let pp = periodic_point(&c, &[Symbol(1), Symbol(-1)], 1e-12).unwrap();
        let ac = angle_itinerary(&Angle::from_ratio(1, 4), 3, 8);
        let it = point_itinerary(&c, pp.z(), 6).unwrap();
        for (k, s) in it.symbols.iter().enumerate() {
            assert_eq!(*s, ac.itinerary.symbol_at(k).unwrap());
        }
    }

    #[test]
    fn classify_known_parameters() {
        let opts = ClassifyOptions {
            budget: 400,
            path_density: 96,
            max_escape_search: 48,
        };
        let c = ctx(10.0, 0.0, 3);
        assert_eq!(classify_escape(&c, &opts).tag, EscapeTag::CantorSet);
        let c = ctx(1e-4, 0.0, 3);
        let cls = classify_escape(&c, &opts);
        assert_eq!(cls.tag, EscapeTag::CantorCircles);
        assert_eq!(cls.first_escape_iterate, Some(0));
    }

    #[test]
    fn classify_rejects_zero() {
        assert!(ParamContext::new(Complex64::new(0.0, 0.0), 3).is_err());
    }
}
