//! Small-dimension vector helpers. Points are plain `Vec<f64>`.

pub type Point = Vec<f64>;

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sub(a: &[f64], b: &[f64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[f64], s: f64) -> Point {
    a.iter().map(|x| x * s).collect()
}

pub fn neg(a: &[f64]) -> Point {
    a.iter().map(|x| -x).collect()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// Componentwise wrap of a difference vector into [-side/2, side/2).
pub fn wrap_diff(d: &[f64], side: f64) -> Point {
    d.iter().map(|x| x - side * (x / side).round()).collect()
}

/// Torus distance: Euclidean length of the wrapped difference.
pub fn torus_dist(a: &[f64], b: &[f64], side: f64) -> f64 {
    let d = sub(a, b);
    norm(&wrap_diff(&d, side))
}

/// Axis-aligned bounding box.
#[derive(Debug, Clone, PartialEq)]
pub struct Aabb {
    pub lo: Point,
    pub hi: Point,
}

impl Aabb {
    pub fn new(lo: Point, hi: Point) -> Self {
        assert_eq!(lo.len(), hi.len());
        Aabb { lo, hi }
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn contains(&self, p: &[f64]) -> bool {
        p.iter()
            .zip(self.lo.iter().zip(&self.hi))
            .all(|(x, (l, h))| *x >= *l && *x <= *h)
    }

    pub fn is_empty(&self) -> bool {
        self.lo.iter().zip(&self.hi).any(|(l, h)| l > h)
    }

    pub fn volume(&self) -> f64 {
        if self.is_empty() {
            return 0.0;
        }
        self.lo.iter().zip(&self.hi).map(|(l, h)| h - l).product()
    }

    pub fn grow(&self, margin: f64) -> Aabb {
        Aabb {
            lo: self.lo.iter().map(|x| x - margin).collect(),
            hi: self.hi.iter().map(|x| x + margin).collect(),
        }
    }

    pub fn translate(&self, t: &[f64]) -> Aabb {
        Aabb { lo: add(&self.lo, t), hi: add(&self.hi, t) }
    }

    /// Cell-center grid with the given step, at most `step`-sized cells.
    /// Returns the per-axis cell counts and a row-major point iterator.
    pub fn grid_centers(&self, step: f64) -> GridCenters {
        let counts: Vec<usize> = self
            .lo
            .iter()
            .zip(&self.hi)
            .map(|(l, h)| (((h - l) / step).ceil() as usize).max(1))
            .collect();
        GridCenters { bbox: self.clone(), counts, index: 0 }
    }
}

/// Row-major iterator over cell centers of a box partitioned per axis.
pub struct GridCenters {
    bbox: Aabb,
    pub counts: Vec<usize>,
    index: usize,
}

impl GridCenters {
    pub fn total(&self) -> usize {
        self.counts.iter().product()
    }

    pub fn cell_volume(&self) -> f64 {
        self.bbox
            .lo
            .iter()
            .zip(&self.bbox.hi)
            .zip(&self.counts)
            .map(|((l, h), c)| (h - l) / *c as f64)
            .product()
    }

    pub fn point_at(&self, mut idx: usize) -> Point {
        let dim = self.counts.len();
        let mut p = vec![0.0; dim];
        for axis in (0..dim).rev() {
            let c = self.counts[axis];
            let k = idx % c;
            idx /= c;
            let l = self.bbox.lo[axis];
            let h = self.bbox.hi[axis];
            p[axis] = l + (h - l) * (k as f64 + 0.5) / c as f64;
        }
        p
    }
}

impl Iterator for GridCenters {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        if self.index >= self.total() {
            return None;
        }
        let p = self.point_at(self.index);
        self.index += 1;
        Some(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrap_diff_halves() {
        assert!((wrap_diff(&[0.9], 1.0)[0] - (-0.1)).abs() < 1e-12);
        assert!((wrap_diff(&[-0.6], 1.0)[0] - 0.4).abs() < 1e-12);
        assert!((torus_dist(&[0.05, 0.0], &[0.95, 0.0], 1.0) - 0.1).abs() < 1e-12);
    }

    #[test]
    fn grid_covers_box() {
        let b = Aabb::new(vec![0.0, 0.0], vec![1.0, 2.0]);
        let g = b.grid_centers(0.5);
        assert_eq!(g.counts, vec![2, 4]);
        let pts: Vec<_> = b.grid_centers(0.5).collect();
        assert_eq!(pts.len(), 8);
        assert!(pts.iter().all(|p| b.contains(p)));
    }
}
