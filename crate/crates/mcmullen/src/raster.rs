//! Grid utilities shared by the cut-ray contouring, puzzle labeling and
//! rendering layers: window/pixel mapping, 4-connected component labeling
//! by union-find, marching-squares contour extraction, and a two-pass
//! chessboard distance transform.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Axis-aligned rectangle in the plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Window {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Window {
        assert!(re_max > re_min && im_max > im_min, "window must be nonempty");
        Window {
            re_min,
            re_max,
            im_min,
            im_max,
        }
    }

    pub fn square(center: Complex64, half: f64) -> Window {
        Window::new(
            center.re - half,
            center.re + half,
            center.im - half,
            center.im + half,
        )
    }

    pub fn width(&self) -> f64 {
        self.re_max - self.re_min
    }

    pub fn height(&self) -> f64 {
        self.im_max - self.im_min
    }

    pub fn contains(&self, z: Complex64) -> bool {
        z.re >= self.re_min && z.re <= self.re_max && z.im >= self.im_min && z.im <= self.im_max
    }
}

/// A window sampled at pixel centers. Row 0 is the bottom (im_min) row;
/// the image writer flips on output.
#[derive(Clone, Copy, Debug)]
pub struct Grid {
    pub window: Window,
    pub width: usize,
    pub height: usize,
}

impl Grid {
    pub fn new(window: Window, width: usize, height: usize) -> Grid {
        assert!(width >= 2 && height >= 2);
        Grid {
            window,
            width,
            height,
        }
    }

    pub fn len(&self) -> usize {
        self.width * self.height
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dx(&self) -> f64 {
        self.window.width() / self.width as f64
    }

    pub fn dy(&self) -> f64 {
        self.window.height() / self.height as f64
    }

    pub fn center(&self, ix: usize, iy: usize) -> Complex64 {
        Complex64::new(
            self.window.re_min + (ix as f64 + 0.5) * self.dx(),
            self.window.im_min + (iy as f64 + 0.5) * self.dy(),
        )
    }

    pub fn index(&self, ix: usize, iy: usize) -> usize {
        iy * self.width + ix
    }

    /// Pixel containing z, if inside the window.
    pub fn pixel_of(&self, z: Complex64) -> Option<(usize, usize)> {
        if !self.window.contains(z) {
            return None;
        }
        let ix = (((z.re - self.window.re_min) / self.dx()) as usize).min(self.width - 1);
        let iy = (((z.im - self.window.im_min) / self.dy()) as usize).min(self.height - 1);
        Some((ix, iy))
    }
}

/// Plain union-find over pixel indices.
pub struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    pub fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let g = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = g;
            x = g;
        }
        x
    }

    pub fn union(&mut self, a: u32, b: u32) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            // Deterministic: smaller root wins.
            if ra < rb {
                self.parent[rb as usize] = ra;
            } else {
                self.parent[ra as usize] = rb;
            }
        }
    }
}

/// 4-connected component labeling of a boolean mask. Returns per-pixel
/// labels (0 for background, 1.. for components numbered in row-major order
/// of their first pixel) and the component count.
pub fn label_components(mask: &[bool], width: usize, height: usize) -> (Vec<u32>, usize) {
    assert_eq!(mask.len(), width * height);
    let mut uf = UnionFind::new(mask.len());
    for y in 0..height {
        for x in 0..width {
            let i = y * width + x;
            if !mask[i] {
                continue;
            }
            if x + 1 < width && mask[i + 1] {
                uf.union(i as u32, (i + 1) as u32);
            }
            if y + 1 < height && mask[i + width] {
                uf.union(i as u32, (i + width) as u32);
            }
        }
    }
    let mut labels = vec![0u32; mask.len()];
    let mut next = 0u32;
    let mut remap: std::collections::HashMap<u32, u32> = std::collections::HashMap::new();
    for i in 0..mask.len() {
        if mask[i] {
            let root = uf.find(i as u32);
            let label = *remap.entry(root).or_insert_with(|| {
                next += 1;
                next
            });
            labels[i] = label;
        }
    }
    (labels, next as usize)
}

/// Component labeling of an integer-coded map: two pixels join when they
/// share the same nonnegative code. Codes < 0 are background.
pub fn label_coded_components(codes: &[i64], width: usize, height: usize) -> (Vec<u32>, usize) {
    assert_eq!(codes.len(), width * height);
    let mut uf = UnionFind::new(codes.len());
    for y in 0..height {
        for x in 0..width {
            let i = y * width + x;
            if codes[i] < 0 {
                continue;
            }
            if x + 1 < width && codes[i + 1] == codes[i] {
                uf.union(i as u32, (i + 1) as u32);
            }
            if y + 1 < height && codes[i + width] == codes[i] {
                uf.union(i as u32, (i + width) as u32);
            }
        }
    }
    let mut labels = vec![0u32; codes.len()];
    let mut next = 0u32;
    let mut remap: std::collections::HashMap<u32, u32> = std::collections::HashMap::new();
    for i in 0..codes.len() {
        if codes[i] >= 0 {
            let root = uf.find(i as u32);
            let label = *remap.entry(root).or_insert_with(|| {
                next += 1;
                next
            });
            labels[i] = label;
        }
    }
    (labels, next as usize)
}

/// Marching squares on a boolean mask sampled at pixel centers. Returns
/// polylines in plane coordinates; closed loops repeat their first vertex.
pub fn marching_squares(mask: &[bool], grid: &Grid) -> Vec<Vec<Complex64>> {
    let w = grid.width;
    let h = grid.height;
    assert_eq!(mask.len(), w * h);
    // Vertices sit on cell edges; key them by integer edge ids so stitching
    // is exact. Horizontal edge between (x,y)-(x+1,y): (2x+1, 2y);
    // vertical edge between (x,y)-(x,y+1): (2x, 2y+1).
    type EdgeId = (u32, u32);
    let mut segments: Vec<(EdgeId, EdgeId)> = Vec::new();
    let at = |x: usize, y: usize| mask[y * w + x];
    for y in 0..h - 1 {
        for x in 0..w - 1 {
            let code = (at(x, y) as u8)
                | (at(x + 1, y) as u8) << 1
                | (at(x + 1, y + 1) as u8) << 2
                | (at(x, y + 1) as u8) << 3;
            let bottom = ((2 * x + 1) as u32, (2 * y) as u32);
            let top = ((2 * x + 1) as u32, (2 * y + 2) as u32);
            let left = ((2 * x) as u32, (2 * y + 1) as u32);
            let right = ((2 * x + 2) as u32, (2 * y + 1) as u32);
            match code {
                0 | 15 => {}
                1 | 14 => segments.push((left, bottom)),
                2 | 13 => segments.push((bottom, right)),
                3 | 12 => segments.push((left, right)),
                4 | 11 => segments.push((right, top)),
                6 | 9 => segments.push((bottom, top)),
                7 | 8 => segments.push((left, top)),
                5 => {
                    segments.push((left, bottom));
                    segments.push((right, top));
                }
                10 => {
                    segments.push((bottom, right));
                    segments.push((left, top));
                }
                _ => unreachable!(),
            }
        }
    }
    // Stitch the soup into chains.
    let mut adj: std::collections::HashMap<EdgeId, Vec<EdgeId>> = std::collections::HashMap::new();
    for (a, b) in &segments {
        adj.entry(*a).or_default().push(*b);
        adj.entry(*b).or_default().push(*a);
    }
    let to_plane = |e: EdgeId| -> Complex64 {
        Complex64::new(
            grid.window.re_min + (e.0 as f64 / 2.0 + 0.5) * grid.dx(),
            grid.window.im_min + (e.1 as f64 / 2.0 + 0.5) * grid.dy(),
        )
    };
    let mut used: std::collections::HashSet<(EdgeId, EdgeId)> = std::collections::HashSet::new();
    let mut polylines = Vec::new();
    let mut keys: Vec<EdgeId> = adj.keys().copied().collect();
    keys.sort_unstable();
    for start in keys {
        let neighbors = adj[&start].clone();
        for first in neighbors {
            if used.contains(&(start, first)) {
                continue;
            }
            let mut chain = vec![start, first];
            used.insert((start, first));
            used.insert((first, start));
            loop {
                let cur = *chain.last().unwrap();
                let mut advanced = false;
                for &next in &adj[&cur] {
                    if !used.contains(&(cur, next)) {
                        used.insert((cur, next));
                        used.insert((next, cur));
                        chain.push(next);
                        advanced = true;
                        break;
                    }
                }
                if !advanced || *chain.last().unwrap() == start {
                    break;
                }
            }
            polylines.push(chain.iter().map(|e| to_plane(*e)).collect::<Vec<_>>());
        }
    }
    polylines
}

/// Chessboard distance (in pixels) from each true pixel to the nearest
/// false pixel, two-pass chamfer. False pixels get 0; border counts as
/// false so distances stay finite.
pub fn interior_distance(mask: &[bool], width: usize, height: usize) -> Vec<u32> {
    assert_eq!(mask.len(), width * height);
    let big = (width + height) as u32;
    let mut d: Vec<u32> = mask.iter().map(|&m| if m { big } else { 0 }).collect();
    let idx = |x: usize, y: usize| y * width + x;
    for y in 0..height {
        for x in 0..width {
            let i = idx(x, y);
            if d[i] == 0 {
                continue;
            }
            let mut best = d[i];
            if x == 0 || y == 0 || x == width - 1 || y == height - 1 {
                best = best.min(1);
            }
            if x > 0 {
                best = best.min(d[idx(x - 1, y)] + 1);
            }
            if y > 0 {
                best = best.min(d[idx(x, y - 1)] + 1);
                if x > 0 {
                    best = best.min(d[idx(x - 1, y - 1)] + 1);
                }
                if x + 1 < width {
                    best = best.min(d[idx(x + 1, y - 1)] + 1);
                }
            }
            d[i] = best;
        }
    }
    for y in (0..height).rev() {
        for x in (0..width).rev() {
            let i = idx(x, y);
            if d[i] == 0 {
                continue;
            }
            let mut best = d[i];
            if x + 1 < width {
                best = best.min(d[idx(x + 1, y)] + 1);
            }
            if y + 1 < height {
                best = best.min(d[idx(x, y + 1)] + 1);
                if x > 0 {
                    best = best.min(d[idx(x - 1, y + 1)] + 1);
                }
                if x + 1 < width {
                    best = best.min(d[idx(x + 1, y + 1)] + 1);
                }
            }
            d[i] = best;
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_two_blobs() {
        // Two diagonal pixels are not 4-connected.
        let mask = vec![true, false, false, true];
        let (labels, count) = label_components(&mask, 2, 2);
        assert_eq!(count, 2);
        assert_ne!(labels[0], labels[3]);
    }

    #[test]
    fn labels_merge_row() {
        let mask = vec![true, true, true, false, false, false];
        let (_, count) = label_components(&mask, 3, 2);
        assert_eq!(count, 1);
    }

    #[test]
    fn marching_squares_disk() {
        let grid = Grid::new(Window::new(-1.0, 1.0, -1.0, 1.0), 64, 64);
        let mut mask = vec![false; grid.len()];
        for y in 0..64 {
            for x in 0..64 {
                mask[grid.index(x, y)] = grid.center(x, y).norm() < 0.6;
            }
        }
        let polylines = marching_squares(&mask, &grid);
        assert_eq!(polylines.len(), 1);
        let loop0 = &polylines[0];
        assert_eq!(loop0.first(), loop0.last());
        for v in loop0 {
            assert!((v.norm() - 0.6).abs() < 0.08);
        }
    }

    #[test]
    fn distance_transform_center() {
        let w = 9;
        let mask = vec![true; w * w];
        let d = interior_distance(&mask, w, w);
        assert_eq!(d[4 * w + 4], 5); // center of an all-true block: border-limited
        assert_eq!(d[0], 1);
    }
}
