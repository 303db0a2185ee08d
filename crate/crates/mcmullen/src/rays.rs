//! External rays, full rays and cut rays.
//!
//! A ray of angle θ is traced from a seed near ∞ by Newton steps against
//! the Böttcher coordinate down to the working equipotential, then extended
//! inward segment by segment through the inverse branches dictated by the
//! symbolic itinerary of θ. A cut ray is approximated by its depth-m sector
//! condition, which is a fattened neighborhood amenable to pixel work:
//! membership, blob counting and marching-squares contours.

use num_complex::Complex64;
use serde::Serialize;

use crate::angle::{angle_itinerary, first_divergence, in_theta_set, tau, Angle, Symbol};
use crate::dynamics::{
    bottcher_newton, inverse_branch_indexed, preimages, ParamContext, TAU as TAU2PI,
};
use crate::error::{McmError, Result};
use crate::raster::{label_components, marching_squares, Grid, Window};

/// Symbolic data backing one full ray / cut ray: the exact first sector
/// index and the residue sequence compared by the membership predicate.
#[derive(Clone, Debug)]
pub struct RaySymbolics {
    pub angle: Angle,
    pub n: u32,
    first_ray_index: u32,
    res_pre: Vec<u32>,
    res_per: Vec<u32>,
}

impl RaySymbolics {
    /// Build from any rational angle. Angles outside the Cantor set (whose
    /// orbit meets the two forbidden intervals) are allowed here; they arise
    /// as preimages of cut-ray cycles.
    pub fn new(angle: &Angle, n: u32) -> RaySymbolics {
        let ac = angle_itinerary(angle, n, 4096);
        let res = |v: &[Symbol]| v.iter().map(|s| s.residue(n)).collect::<Vec<_>>();
        RaySymbolics {
            angle: angle.clone(),
            n,
            first_ray_index: ac
                .itinerary
                .symbol_at(0)
                .expect("itinerary has at least one symbol")
                .ray_index(n),
            res_pre: res(&ac.itinerary.preperiod),
            res_per: res(&ac.itinerary.period),
        }
    }

    pub fn residue_at(&self, k: usize) -> u32 {
        if k < self.res_pre.len() {
            self.res_pre[k]
        } else {
            self.res_per[(k - self.res_pre.len()) % self.res_per.len()]
        }
    }

    pub fn first_ray_index(&self) -> u32 {
        self.first_ray_index
    }

    /// Depth-m cut-ray membership: each iterate's sector must agree with
    /// the itinerary up to sign, i.e. the ray-index residues mod n match.
    /// 0 and ∞ belong at every depth; boundary hits count as members.
    pub fn cut_ray_member(&self, ctx: &ParamContext, z: Complex64, m: usize) -> bool {
        debug_assert_eq!(self.n, ctx.n);
        let mut w = z;
        for k in 0..=m {
            if w.norm() < 1e-13 || !w.is_finite() || w.norm() > 1e13 {
                return true;
            }
            let (sec, _on_boundary) = ctx.sector_of_point_tol(w, 1e-11);
            if sec.0.residue(ctx.n) != self.residue_at(k) {
                return false;
            }
            w = ctx.f(w);
        }
        true
    }

    /// Full-ray membership pins the first sector exactly (not up to sign).
    pub fn full_ray_member(&self, ctx: &ParamContext, z: Complex64, m: usize) -> bool {
        if z.norm() < 1e-13 || !z.is_finite() || z.norm() > 1e13 {
            return true;
        }
        let (sec, on_boundary) = ctx.sector_of_point_tol(z, 1e-11);
        let idx = sec.0.ray_index(ctx.n);
        let want = self.first_ray_index;
        // A boundary hit on ray ℓ_idx resolves counterclockwise into sector
        // idx; the clockwise neighbor idx−1 also owns that ray.
        let adjacent = on_boundary && (want + 1) % (2 * ctx.n) == idx;
        if !(idx == want || adjacent) {
            return false;
        }
        self.cut_ray_member(ctx, z, m)
    }
}

/// Traced external ray: vertices from the outermost level inward, with the
/// analytic Green level of each vertex.
#[derive(Clone, Debug, Serialize)]
pub struct RayPolyline {
    pub theta: Angle,
    pub vertices: Vec<Complex64>,
    pub green_levels: Vec<f64>,
    pub landing_estimate: Complex64,
    pub landing_error: f64,
}

impl RayPolyline {
    pub fn json_points(&self) -> Vec<[f64; 3]> {
        self.vertices
            .iter()
            .zip(&self.green_levels)
            .map(|(z, g)| [z.re, z.im, *g])
            .collect()
    }
}

/// Vertices per level interval used by the tracer.
pub const RAY_VERTICES_PER_LEVEL: usize = 32;

/// One equipotential span [v, nv] of the ray of (f64) angle `a`, traced by
/// Newton continuation from the identity-tangent seed at the top level.
fn outer_segment(
    ctx: &ParamContext,
    a_turns: f64,
    g_hi: f64,
    g_lo: f64,
    steps: usize,
    tol: f64,
) -> Result<Vec<(Complex64, f64)>> {
    let angle = a_turns * TAU2PI;
    let mut out = Vec::with_capacity(steps + 1);
    let mut seed = Complex64::from_polar(g_hi.exp(), angle);
    for t in 0..=steps {
        let g = g_hi + (g_lo - g_hi) * t as f64 / steps as f64;
        let z = bottcher_newton(ctx, g, angle, seed, tol)?;
        out.push((z, g));
        seed = z * (-((g_hi - g_lo) / steps as f64)).exp();
    }
    Ok(out)
}

/// Trace the external ray R(θ). The outer piece spans levels [v, n²v]; each
/// deeper piece is the pullback of the [v, nv] span of the shifted angle
/// through the inverse branches of the itinerary. Works for any rational
/// angle whose coding is defined (preimage angles included).
pub fn trace_ray(ctx: &ParamContext, theta: &Angle, depth: usize) -> Result<RayPolyline> {
    ctx.require_coding()?;
    let n = ctx.n;
    let nf = n as f64;
    let v = ctx.working_level();
    let tol = 1e-12;

    let mut vertices: Vec<Complex64> = Vec::new();
    let mut levels: Vec<f64> = Vec::new();

    // Outer approach: two level intervals ending at G = v.
    let outer = outer_segment(
        ctx,
        theta.to_f64(),
        nf * nf * v,
        v,
        2 * RAY_VERTICES_PER_LEVEL,
        tol,
    )?;
    for (z, g) in outer {
        vertices.push(z);
        levels.push(g);
    }

    // Shifted angles as f64 plus the exact branch indices along the orbit.
    let mut shifted: Vec<f64> = Vec::with_capacity(depth + 2);
    let mut branch_idx: Vec<u32> = Vec::with_capacity(depth + 1);
    let mut cur = theta.clone();
    for _ in 0..=depth + 1 {
        shifted.push(cur.to_f64());
        branch_idx.push(crate::angle::sector_of_angle(&cur, n).ray_index(n));
        cur = tau(&cur, n);
    }

    let mut last_segment: Vec<Complex64> = Vec::new();
    for k in 0..depth {
        let seg = outer_segment(
            ctx,
            shifted[k + 1],
            nf * v,
            v,
            RAY_VERTICES_PER_LEVEL,
            tol,
        )?;
        let mut pulled: Vec<(Complex64, f64)> = seg;
        for i in (0..=k).rev() {
            for p in pulled.iter_mut() {
                p.0 = inverse_branch_indexed(ctx, branch_idx[i], p.0)?;
            }
        }
        last_segment = pulled.iter().map(|p| p.0).collect();
        let scale = nf.powi(-(k as i32 + 1));
        for (z, g) in pulled {
            vertices.push(z);
            levels.push(g * scale);
        }
    }

    let landing = *vertices.last().unwrap();
    let landing_error = if last_segment.is_empty() {
        f64::INFINITY
    } else {
        segment_diameter(&last_segment)
    };
    Ok(RayPolyline {
        theta: theta.clone(),
        vertices,
        green_levels: levels,
        landing_estimate: landing,
        landing_error,
    })
}

fn segment_diameter(seg: &[Complex64]) -> f64 {
    let mut d = 0.0f64;
    for i in 0..seg.len() {
        for j in i + 1..seg.len() {
            d = d.max((seg[i] - seg[j]).norm());
        }
    }
    d
}

/// External-ray tracing restricted to angles of the Cantor set (the landing
/// statement applies there).
pub fn trace_external_ray(ctx: &ParamContext, theta: &Angle, depth: usize) -> Result<RayPolyline> {
    if !in_theta_set(theta, ctx.n) {
        return Err(McmError::Refused(format!(
            "angle {theta} is not in the Cantor set for n = {}",
            ctx.n
        )));
    }
    trace_ray(ctx, theta, depth)
}

/// Depth-m cut-ray membership for θ in the Cantor set.
pub fn cut_ray_membership(
    ctx: &ParamContext,
    theta: &Angle,
    m: usize,
    z: Complex64,
) -> Result<bool> {
    ctx.require_coding()?;
    Ok(RaySymbolics::new(theta, ctx.n).cut_ray_member(ctx, z, m))
}

/// Grid picture of a depth-m cut-ray approximant.
#[derive(Clone, Debug, Serialize)]
pub struct CutRayApprox {
    pub theta: Angle,
    pub depth: usize,
    pub window: Window,
    pub resolution: usize,
    /// 4-connected membership blobs found on the grid.
    pub blob_count: usize,
    /// 2^{m+1}, the disk count of the exact approximant.
    pub expected_blobs: usize,
    pub boundary: Vec<Vec<Complex64>>,
    /// Locations where distinct blobs come within a pixel diagonal
    /// (the preimages of ∞ where consecutive disks meet).
    pub touch_points: Vec<Complex64>,
    pub resolution_warning: bool,
}

fn default_cut_ray_window(ctx: &ParamContext) -> Window {
    Window::square(Complex64::new(0.0, 0.0), 2.1 * ctx.escape_radius)
}

fn contour_membership<F: Fn(Complex64) -> bool + Sync>(
    member: F,
    theta: &Angle,
    m: usize,
    window: Window,
    resolution: usize,
) -> CutRayApprox {
    use rayon::prelude::*;
    let grid = Grid::new(window, resolution, resolution);
    let mut mask = vec![false; grid.len()];
    mask.par_chunks_mut(grid.width)
        .enumerate()
        .for_each(|(iy, row)| {
            for (ix, cell) in row.iter_mut().enumerate() {
                *cell = member(grid.center(ix, iy));
            }
        });
    let (labels, count) = label_components(&mask, grid.width, grid.height);

    // Diagonal contacts between different labels mark the pinch points.
    let mut touches: Vec<Complex64> = Vec::new();
    for iy in 0..grid.height - 1 {
        for ix in 0..grid.width - 1 {
            let a = labels[grid.index(ix, iy)];
            let b = labels[grid.index(ix + 1, iy + 1)];
            let c = labels[grid.index(ix + 1, iy)];
            let d = labels[grid.index(ix, iy + 1)];
            for (p, q) in [(a, b), (c, d)] {
                if p != 0 && q != 0 && p != q {
                    let z = (grid.center(ix, iy) + grid.center(ix + 1, iy + 1)) / 2.0;
                    if touches
                        .iter()
                        .all(|t| (t - z).norm() > 4.0 * grid.dx())
                    {
                        touches.push(z);
                    }
                }
            }
        }
    }

    let expected = 1usize << (m + 1);
    CutRayApprox {
        theta: theta.clone(),
        depth: m,
        window,
        resolution,
        blob_count: count,
        expected_blobs: expected,
        boundary: marching_squares(&mask, &grid),
        touch_points: touches,
        resolution_warning: count != expected,
    }
}

/// Membership raster, blob count and contours of Ω_{λ,m}^θ.
pub fn trace_cut_ray_boundary(
    ctx: &ParamContext,
    theta: &Angle,
    m: usize,
    resolution: usize,
) -> Result<CutRayApprox> {
    ctx.require_coding()?;
    if !in_theta_set(theta, ctx.n) {
        return Err(McmError::Refused(format!(
            "angle {theta} is not in the Cantor set for n = {}",
            ctx.n
        )));
    }
    let sym = RaySymbolics::new(theta, ctx.n);
    let window = default_cut_ray_window(ctx);
    Ok(contour_membership(
        |z| sym.cut_ray_member(ctx, z, m),
        theta,
        m,
        window,
        resolution,
    ))
}

/// True when a cut ray comes within the depth-m approximant of the critical
/// orbit (the graph built on it would be touchable).
pub fn cut_ray_touches_critical_orbit(
    ctx: &ParamContext,
    theta: &Angle,
    m: usize,
    orbit_length: usize,
) -> bool {
    let sym = RaySymbolics::new(theta, ctx.n);
    for c in &ctx.critical_points {
        let mut w = *c;
        for _ in 0..orbit_length {
            if !w.is_finite() || w.norm() > 1e12 {
                break;
            }
            if sym.cut_ray_member(ctx, w, m) {
                return true;
            }
            w = ctx.f(w);
        }
    }
    false
}

/// τ-preimages of the cut ray {θ, θ+1/2}, as canonical cut-ray angles.
pub fn preimage_cut_ray_angles(theta: &Angle, n: u32) -> Vec<Angle> {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    let mut out: Vec<Angle> = Vec::new();
    for base in [theta.clone(), theta.plus_half()] {
        for j in 0..n {
            let pre = Angle::new(
                (base.value() + BigRational::from(BigInt::from(j)))
                    / BigRational::from(BigInt::from(n)),
            );
            let canon = pre.cut_ray_canonical();
            if !out.contains(&canon) {
                out.push(canon);
            }
        }
    }
    out.sort();
    out
}

/// A preimage full ray ω^α (α in some τ-preimage of a Cantor-set cycle):
/// membership picture plus the external ray R(α) that selects the lift.
#[derive(Clone, Debug, Serialize)]
pub struct FullRayApprox {
    pub alpha: Angle,
    pub approx: CutRayApprox,
    pub external_ray: RayPolyline,
}

/// Build the unique lift ω^α with ω^α ∩ B = R(α): grid membership pins the
/// first sector exactly and the traced R(α) seeds/verifies the selection.
pub fn preimage_cut_ray(
    ctx: &ParamContext,
    alpha: &Angle,
    m: usize,
    resolution: usize,
) -> Result<FullRayApprox> {
    ctx.require_coding()?;
    // The forward orbit must enter the Cantor set: all period symbols coding.
    let ac = angle_itinerary(alpha, ctx.n, 4096);
    if ac.itinerary.truncated || !ac.itinerary.period.iter().all(|s| s.is_coding(ctx.n)) {
        return Err(McmError::Refused(format!(
            "angle {alpha} does not fall into a Cantor-set cycle"
        )));
    }
    // The generating cycle's cut ray must miss the critical orbit.
    let cycle_angle = {
        let mut cur = alpha.clone();
        for _ in 0..ac.itinerary.preperiod.len() {
            cur = tau(&cur, ctx.n);
        }
        cur
    };
    if cut_ray_touches_critical_orbit(ctx, &cycle_angle, m.max(16), 48) {
        return Err(McmError::TouchableRay);
    }
    let sym = RaySymbolics::new(alpha, ctx.n);
    let window = default_cut_ray_window(ctx);
    let approx = contour_membership(
        |z| sym.full_ray_member(ctx, z, m),
        alpha,
        m,
        window,
        resolution,
    );
    let external_ray = trace_ray(ctx, alpha, (m + 4).max(12))?;
    Ok(FullRayApprox {
        alpha: alpha.clone(),
        approx,
        external_ray,
    })
}

/// Symbolic count and numerically located common points of two cut rays.
#[derive(Clone, Debug, Serialize)]
pub struct IntersectionReport {
    pub j: usize,
    pub predicted: usize,
    /// Includes 0 and ∞ (reported as such in `contains_zero_and_infinity`).
    pub located_finite: Vec<Complex64>,
    pub contains_zero_and_infinity: bool,
    pub located_total: usize,
    pub matched: bool,
}

/// Count Ω^α ∩ Ω^β: the symbolic prediction 2^{J+1} cross-checked against
/// preimages of ∞ located by root-finding and filtered by membership.
pub fn intersection_count(
    ctx: &ParamContext,
    alpha: &Angle,
    beta: &Angle,
    m: usize,
) -> Result<IntersectionReport> {
    ctx.require_coding()?;
    let j = first_divergence(alpha, beta, ctx.n)?;
    let predicted = 1usize << (j + 1);
    let sym_a = RaySymbolics::new(alpha, ctx.n);
    let sym_b = RaySymbolics::new(beta, ctx.n);

    // Preimages of ∞ out to level J+1: levels 0,1 are {∞},{0}; level k+2
    // collects f^{-1} of the finite points of level k+1.
    let mut levels: Vec<Vec<Complex64>> = vec![vec![Complex64::new(0.0, 0.0)]];
    for _ in 0..j {
        let prev = levels.last().unwrap();
        let mut next: Vec<Complex64> = Vec::new();
        for w in prev {
            for z in preimages(ctx, *w) {
                if next.iter().all(|q| (q - z).norm() > 1e-10) {
                    next.push(z);
                }
            }
        }
        levels.push(next);
    }

    let depth = m.max(j + 4);
    let mut located: Vec<Complex64> = Vec::new();
    for level in &levels {
        for z in level {
            if sym_a.cut_ray_member(ctx, *z, depth) && sym_b.cut_ray_member(ctx, *z, depth) {
                if located.iter().all(|q| (q - z).norm() > 1e-8) {
                    located.push(*z);
                }
            }
        }
    }
    // 0 and ∞ always belong to both rays.
    let total = located.len() + 1;
    Ok(IntersectionReport {
        j,
        predicted,
        located_finite: located,
        contains_zero_and_infinity: true,
        located_total: total,
        matched: total == predicted,
    })
}

/// Landing points of R(θ) and R(θ+1/2): the two points of Ω^θ ∩ ∂B for
/// admissible-pool angles.
pub fn boundary_intersection_points(
    ctx: &ParamContext,
    theta: &Angle,
    depth: usize,
) -> Result<(Complex64, Complex64)> {
    let r1 = trace_external_ray(ctx, theta, depth)?;
    let r2 = trace_external_ray(ctx, &theta.plus_half(), depth)?;
    Ok((r1.landing_estimate, r2.landing_estimate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::green;

    fn test_ctx() -> ParamContext {
        ParamContext::new(
            Complex64::from_polar(0.2, std::f64::consts::FRAC_PI_4),
            3,
        )
        .unwrap()
    }

    #[test]
    fn ray_levels_decay_and_f_shifts_vertices() {
        let ctx = test_ctx();
        let theta = Angle::from_ratio(1, 4);
        let ray = trace_external_ray(&ctx, &theta, 20).unwrap();
        // Levels strictly decreasing.
        for w in ray.green_levels.windows(2) {
            assert!(w[1] < w[0] + 1e-12);
        }
        // Stored levels match the Green function on early vertices.
        for (z, g) in ray.vertices.iter().zip(&ray.green_levels).take(40) {
            let gv = green(&ctx, *z, 400, 1e-12).value().unwrap();
            assert!((gv - g).abs() < 1e-8, "stored level {g} vs green {gv}");
        }
        // Equivariance: f maps pulled segment k of R(θ) onto pulled segment
        // k−1 of R(τθ), vertex by vertex.
        let tau_ray = trace_external_ray(&ctx, &tau(&theta, 3), 19).unwrap();
        let base = 2 * RAY_VERTICES_PER_LEVEL + 1;
        let seg = RAY_VERTICES_PER_LEVEL + 1;
        for k in 1..6 {
            for t in 0..seg {
                let z = ctx.f(ray.vertices[base + k * seg + t]);
                let zt = tau_ray.vertices[base + (k - 1) * seg + t];
                assert!(
                    (z - zt).norm() < 1e-7,
                    "k={k} t={t}: |f(v) - v'| = {}",
                    (z - zt).norm()
                );
            }
        }
    }

    #[test]
    fn segment_diameters_decay_geometrically() {
        let ctx = test_ctx();
        let ray = trace_external_ray(&ctx, &Angle::from_ratio(1, 2), 24).unwrap();
        let seg_len = RAY_VERTICES_PER_LEVEL + 1;
        let start = 2 * RAY_VERTICES_PER_LEVEL + 1;
        let mut diameters = Vec::new();
        for k in 0..24 {
            let seg = &ray.vertices[start + k * seg_len..start + (k + 1) * seg_len];
            diameters.push(segment_diameter(seg));
        }
        // Ratio bounded away from 1 after the first few segments.
        for w in diameters.windows(2).skip(3) {
            assert!(w[1] < 0.9 * w[0] + 1e-12, "{} -> {}", w[0], w[1]);
        }
        assert!(ray.landing_error < 1e-6);
    }

    #[test]
    fn landing_point_has_ray_itinerary() {
        let ctx = test_ctx();
        let theta = Angle::from_ratio(1, 2);
        let ray = trace_external_ray(&ctx, &theta, 40).unwrap();
        let pp = crate::dynamics::periodic_point(&ctx, &[Symbol(2)], 1e-12).unwrap();
        assert!((ray.landing_estimate - pp.z()).norm() < 1e-7);
    }

    #[test]
    fn membership_basics_and_symmetry() {
        let ctx = test_ctx();
        let theta = Angle::from_ratio(1, 2);
        assert!(cut_ray_membership(&ctx, &theta, 6, Complex64::new(0.0, 0.0)).unwrap());
        assert!(cut_ray_membership(&ctx, &theta, 6, Complex64::new(1e20, 0.0)).unwrap());
        let pp = crate::dynamics::periodic_point(&ctx, &[Symbol(2)], 1e-12).unwrap();
        assert!(cut_ray_membership(&ctx, &theta, 8, pp.z()).unwrap());
        // Ω = −Ω on a sample of members and non-members.
        let sym = RaySymbolics::new(&theta, 3);
        for i in 0..200 {
            let z = Complex64::from_polar(
                0.2 + 3.0 * (i as f64 / 200.0),
                (i as f64) * 0.7311,
            );
            assert_eq!(
                sym.cut_ray_member(&ctx, z, 4),
                sym.cut_ray_member(&ctx, -z, 4)
            );
        }
    }

    #[test]
    fn membership_nesting() {
        let ctx = test_ctx();
        let sym = RaySymbolics::new(&Angle::from_ratio(1, 2), 3);
        for i in 0..500 {
            let z = Complex64::from_polar(
                0.1 + 3.5 * ((i * 37 % 500) as f64 / 500.0),
                (i as f64) * 1.618,
            );
            if sym.cut_ray_member(&ctx, z, 5) {
                assert!(sym.cut_ray_member(&ctx, z, 4));
            }
        }
    }

    #[test]
    fn blob_counts_small() {
        let ctx = test_ctx();
        let theta = Angle::from_ratio(1, 2);
        for m in 0..2 {
            let approx = trace_cut_ray_boundary(&ctx, &theta, m, 384).unwrap();
            assert_eq!(
                approx.blob_count,
                1 << (m + 1),
                "m={m}: {} blobs",
                approx.blob_count
            );
        }
    }

    #[test]
    fn preimage_angles_of_quarter() {
        let pre = preimage_cut_ray_angles(&Angle::from_ratio(1, 4), 3);
        assert_eq!(
            pre,
            vec![
                Angle::from_ratio(1, 12),
                Angle::from_ratio(1, 4),
                Angle::from_ratio(5, 12)
            ]
        );
        let pre = preimage_cut_ray_angles(&Angle::from_ratio(1, 2), 3);
        assert_eq!(
            pre,
            vec![
                Angle::from_ratio(1, 6),
                Angle::from_ratio(1, 3),
                Angle::from_ratio(1, 2)
            ]
        );
    }

    #[test]
    fn preimage_full_ray_symmetry_and_cover() {
        let ctx = test_ctx();
        let alpha = Angle::from_ratio(1, 12);
        let fr = preimage_cut_ray(&ctx, &alpha, 6, 128).unwrap();
        let sym_a = RaySymbolics::new(&alpha, 3);
        let sym_anti = RaySymbolics::new(&alpha.plus_half(), 3);
        let sym_ta = RaySymbolics::new(&tau(&alpha, 3), 3);
        let sym_ta2 = RaySymbolics::new(&tau(&alpha, 3).plus_half(), 3);
        // ω^{α+1/2} = −ω^α and f(ω^α) ⊂ ω^{τα} ∪ ω^{τα+1/2}, sampled on the
        // traced external-ray vertices (certainly on the full ray).
        for z in fr.external_ray.vertices.iter().step_by(7) {
            assert!(sym_a.full_ray_member(&ctx, *z, 4));
            assert!(sym_anti.full_ray_member(&ctx, -z, 4));
            let w = ctx.f(*z);
            assert!(
                sym_ta.full_ray_member(&ctx, w, 3) || sym_ta2.full_ray_member(&ctx, w, 3)
            );
        }
    }

    #[test]
    fn intersection_counts() {
        let ctx = test_ctx();
        let quarter = Angle::from_ratio(1, 4);
        let half = Angle::from_ratio(1, 2);
        let rep = intersection_count(&ctx, &quarter, &half, 8).unwrap();
        assert_eq!(rep.j, 0);
        assert_eq!(rep.predicted, 2);
        assert!(rep.matched, "located {}", rep.located_total);
        assert!(matches!(
            intersection_count(&ctx, &half, &half, 8),
            Err(McmError::SameCutRay)
        ));
    }

    #[test]
    fn boundary_two_points_are_antipodal() {
        let ctx = test_ctx();
        let (p, q) = boundary_intersection_points(&ctx, &Angle::from_ratio(1, 2), 36).unwrap();
        assert!((p + q).norm() < 1e-7);
        let pp = crate::dynamics::periodic_point(&ctx, &[Symbol(2)], 1e-12).unwrap();
        assert!((p - pp.z()).norm() < 1e-7);
    }
}
