//! Fuzzy c-means clustering and elbow-method cluster-count selection.
//!
//! Standard alternating optimisation: memberships from the current centers,
//! centers from the weighted points, repeated until the largest center
//! displacement falls under the tolerance. The objective
//! `J = sum_i sum_k u_ik^m * ||x_i - c_k||^2` is recorded per iteration and is
//! non-increasing; the returned membership matrix is recomputed from the final
//! centers so it agrees exactly with [`fcm_membership`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::rng::Rng;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FcmError {
    TooFewClusters(usize),
    MoreClustersThanPoints { clusters: usize, points: usize },
    InvalidFuzzifier(f64),
    EmptyInput,
    DimensionMismatch,
    DegeneratePoints,
    InvalidRange { min: usize, max: usize },
}

impl fmt::Display for FcmError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FcmError::TooFewClusters(c) => write!(f, "cluster count must be at least 2, got {c}"),
            FcmError::MoreClustersThanPoints { clusters, points } => {
                write!(f, "cannot place {clusters} clusters over {points} points")
            }
            FcmError::InvalidFuzzifier(m) => write!(f, "fuzzifier must be finite and > 1, got {m}"),
            FcmError::EmptyInput => write!(f, "no points to cluster"),
            FcmError::DimensionMismatch => write!(f, "points have inconsistent dimensionality"),
            FcmError::DegeneratePoints => write!(f, "all points are identical; clustering is undefined"),
            FcmError::InvalidRange { min, max } => {
                write!(f, "invalid cluster range [{min}, {max}]")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for FcmError {}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FcmParams {
    pub clusters: usize,
    pub fuzzifier: f64,
    /// Convergence threshold on the largest center displacement.
    pub tolerance: f64,
    pub max_iterations: usize,
    pub seed: u64,
}

impl FcmParams {
    pub fn new(clusters: usize, seed: u64) -> Self {
        FcmParams { clusters, fuzzifier: 2.0, tolerance: 1e-6, max_iterations: 300, seed }
    }
}

#[derive(Clone, Debug)]
pub struct ClusterModel {
    pub centers: Vec<Vec<f64>>,
    pub fuzzifier: f64,
    /// Row-stochastic membership matrix, one row per input point.
    pub memberships: Vec<Vec<f64>>,
    /// Final objective value, consistent with `centers` and `memberships`.
    pub objective: f64,
    /// Objective after each iteration, non-increasing.
    pub objective_history: Vec<f64>,
    pub iterations_used: usize,
}

fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn upow(u: f64, m: f64) -> f64 {
    if m == 2.0 {
        u * u
    } else {
        libm::pow(u, m)
    }
}

/// Membership of one point to every center. Exact coincidence with one or
/// more centers puts all mass, split evenly, on the coinciding centers.
pub fn fcm_membership(x: &[f64], centers: &[Vec<f64>], fuzzifier: f64) -> Vec<f64> {
    let d2: Vec<f64> = centers.iter().map(|c| dist2(x, c)).collect();
    membership_from_dist2(&d2, fuzzifier)
}

fn membership_from_dist2(d2: &[f64], fuzzifier: f64) -> Vec<f64> {
    let zeros = d2.iter().filter(|&&d| d == 0.0).count();
    if zeros > 0 {
        let share = 1.0 / zeros as f64;
        return d2.iter().map(|&d| if d == 0.0 { share } else { 0.0 }).collect();
    }
    let exponent = 1.0 / (fuzzifier - 1.0);
    d2.iter()
        .map(|&dk| {
            let denom: f64 = d2
                .iter()
                .map(|&dj| {
                    let ratio = dk / dj;
                    if exponent == 1.0 {
                        ratio
                    } else {
                        libm::pow(ratio, exponent)
                    }
                })
                .sum();
            1.0 / denom
        })
        .collect()
}

fn objective(points: &[Vec<f64>], centers: &[Vec<f64>], memberships: &[Vec<f64>], m: f64) -> f64 {
    let mut j = 0.0;
    for (x, row) in points.iter().zip(memberships) {
        for (c, &u) in centers.iter().zip(row) {
            j += upow(u, m) * dist2(x, c);
        }
    }
    j
}

/// Cluster `points`, initialising centers on `clusters` distinct data points
/// drawn under the seed.
pub fn fcm_fit(points: &[Vec<f64>], params: &FcmParams) -> Result<ClusterModel, FcmError> {
    let n = points.len();
    if n == 0 {
        return Err(FcmError::EmptyInput);
    }
    let dim = points[0].len();
    if points.iter().any(|p| p.len() != dim) {
        return Err(FcmError::DimensionMismatch);
    }
    if params.clusters < 2 {
        return Err(FcmError::TooFewClusters(params.clusters));
    }
    if params.clusters > n {
        return Err(FcmError::MoreClustersThanPoints { clusters: params.clusters, points: n });
    }
    if !(params.fuzzifier.is_finite() && params.fuzzifier > 1.0) {
        return Err(FcmError::InvalidFuzzifier(params.fuzzifier));
    }
    if points.iter().all(|p| p == &points[0]) {
        return Err(FcmError::DegeneratePoints);
    }

    let m = params.fuzzifier;
    let mut rng = Rng::seed_from(params.seed);
    let mut centers: Vec<Vec<f64>> = rng
        .sample_distinct(n, params.clusters)
        .into_iter()
        .map(|i| points[i].clone())
        .collect();

    let mut memberships: Vec<Vec<f64>> = vec![Vec::new(); n];
    let mut objective_history = Vec::new();
    let mut iterations_used = 0;

    for _ in 0..params.max_iterations {
        iterations_used += 1;

        for (row, x) in memberships.iter_mut().zip(points) {
            *row = fcm_membership(x, &centers, m);
        }

        let mut new_centers = vec![vec![0.0; dim]; params.clusters];
        let mut mass = vec![0.0; params.clusters];
        for (x, row) in points.iter().zip(&memberships) {
            for (k, &u) in row.iter().enumerate() {
                let w = upow(u, m);
                mass[k] += w;
                for (acc, &xi) in new_centers[k].iter_mut().zip(x) {
                    *acc += w * xi;
                }
            }
        }
        for (k, center) in new_centers.iter_mut().enumerate() {
            if mass[k] > 0.0 {
                for acc in center.iter_mut() {
                    *acc /= mass[k];
                }
            } else {
                // a cluster that lost all mass keeps its previous position
                center.clone_from(&centers[k]);
            }
        }

        let shift = centers
            .iter()
            .zip(&new_centers)
            .map(|(old, new)| libm::sqrt(dist2(old, new)))
            .fold(0.0, f64::max);
        centers = new_centers;
        objective_history.push(objective(points, &centers, &memberships, m));

        if shift < params.tolerance {
            break;
        }
    }

    // make the returned matrix exactly consistent with the final centers
    for (row, x) in memberships.iter_mut().zip(points) {
        *row = fcm_membership(x, &centers, m);
    }
    let final_objective = objective(points, &centers, &memberships, m);
    objective_history.push(final_objective);

    Ok(ClusterModel {
        centers,
        fuzzifier: m,
        memberships,
        objective: final_objective,
        objective_history,
        iterations_used,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ElbowPoint {
    pub clusters: usize,
    pub objective: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ElbowCurve {
    pub points: Vec<ElbowPoint>,
}

impl ElbowCurve {
    /// Knee suggestion: the cluster count whose (normalised) curve point lies
    /// farthest from the chord between the curve endpoints. Degenerate curves
    /// (single point, flat objective) fall back to the smallest count.
    pub fn knee(&self) -> Option<usize> {
        let pts = &self.points;
        match pts.len() {
            0 => return None,
            1 => return Some(pts[0].clusters),
            _ => {}
        }
        let (c0, j0) = (pts[0].clusters as f64, pts[0].objective);
        let (c1, j1) = (pts[pts.len() - 1].clusters as f64, pts[pts.len() - 1].objective);
        if j0 == j1 || c0 == c1 {
            return Some(pts[0].clusters);
        }
        let mut best = (pts[0].clusters, f64::NEG_INFINITY);
        for p in pts {
            let t = (p.clusters as f64 - c0) / (c1 - c0);
            let z = (p.objective - j0) / (j1 - j0);
            let distance = (z - t).abs();
            if distance > best.1 {
                best = (p.clusters, distance);
            }
        }
        Some(best.0)
    }
}

/// One `fcm_fit` per cluster count in `[min_clusters, max_clusters]`, each
/// with a fresh seed derived from `base.seed` and the count.
pub fn elbow_curve(
    points: &[Vec<f64>],
    min_clusters: usize,
    max_clusters: usize,
    base: &FcmParams,
) -> Result<ElbowCurve, FcmError> {
    if min_clusters < 2 || min_clusters > max_clusters {
        return Err(FcmError::InvalidRange { min: min_clusters, max: max_clusters });
    }
    let mut curve = Vec::with_capacity(max_clusters - min_clusters + 1);
    for c in min_clusters..=max_clusters {
        let params = FcmParams {
            clusters: c,
            seed: crate::rng::derive_seed(base.seed, c as u64),
            ..*base
        };
        let model = fcm_fit(points, &params)?;
        curve.push(ElbowPoint { clusters: c, objective: model.objective });
    }
    Ok(ElbowCurve { points: curve })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blob(rng: &mut Rng, center: (f64, f64), spread: f64, count: usize) -> Vec<Vec<f64>> {
        (0..count)
            .map(|_| {
                vec![
                    center.0 + rng.uniform(-spread, spread),
                    center.1 + rng.uniform(-spread, spread),
                ]
            })
            .collect()
    }

    fn mean(points: &[Vec<f64>]) -> Vec<f64> {
        let dim = points[0].len();
        let mut out = vec![0.0; dim];
        for p in points {
            for (o, v) in out.iter_mut().zip(p) {
                *o += v;
            }
        }
        for o in &mut out {
            *o /= points.len() as f64;
        }
        out
    }

    #[test]
    fn two_blobs_recover_their_means() {
        let mut rng = Rng::seed_from(1);
        let a = blob(&mut rng, (0.1, 0.1), 0.03, 50);
        let b = blob(&mut rng, (0.9, 0.9), 0.03, 50);
        let blob_means = [mean(&a), mean(&b)];
        let mut points = a;
        points.extend(b);

        let model = fcm_fit(&points, &FcmParams::new(2, 42)).unwrap();
        for center in &model.centers {
            let closest = blob_means
                .iter()
                .map(|m| libm::sqrt(dist2(center, m)))
                .fold(f64::INFINITY, f64::min);
            assert!(closest < 0.05, "center {:?} too far from both blob means", center);
        }
        // and the two centers grab different blobs
        let d = libm::sqrt(dist2(&model.centers[0], &model.centers[1]));
        assert!(d > 0.5);
    }

    #[test]
    fn membership_rows_sum_to_one() {
        let mut rng = Rng::seed_from(2);
        let mut points = blob(&mut rng, (0.2, 0.4), 0.1, 40);
        points.extend(blob(&mut rng, (0.8, 0.6), 0.1, 40));
        let model = fcm_fit(&points, &FcmParams::new(3, 5)).unwrap();
        for row in &model.memberships {
            let total: f64 = row.iter().sum();
            assert!((total - 1.0).abs() < 1e-9);
            assert!(row.iter().all(|&u| (0.0..=1.0).contains(&u)));
        }
    }

    #[test]
    fn objective_is_non_increasing() {
        let mut rng = Rng::seed_from(3);
        let mut points = blob(&mut rng, (0.3, 0.3), 0.15, 60);
        points.extend(blob(&mut rng, (0.7, 0.7), 0.15, 60));
        let model = fcm_fit(&points, &FcmParams::new(4, 9)).unwrap();
        for pair in model.objective_history.windows(2) {
            assert!(pair[1] <= pair[0] + 1e-10, "J increased: {} -> {}", pair[0], pair[1]);
        }
    }

    #[test]
    fn objective_is_recomputable_from_fields() {
        let mut rng = Rng::seed_from(4);
        let points = blob(&mut rng, (0.5, 0.5), 0.3, 80);
        let model = fcm_fit(&points, &FcmParams::new(3, 1)).unwrap();
        let recomputed = objective(&points, &model.centers, &model.memberships, model.fuzzifier);
        let rel = (recomputed - model.objective).abs() / model.objective.abs().max(1e-300);
        assert!(rel < 1e-8);
    }

    #[test]
    fn point_on_center_gets_unit_membership() {
        let centers = vec![vec![0.0, 0.0], vec![1.0, 1.0], vec![0.5, 0.0], vec![0.3, 0.9]];
        let u = fcm_membership(&[0.5, 0.0], &centers, 2.0);
        assert_eq!(u, vec![0.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn equidistant_point_splits_membership() {
        let centers = vec![vec![0.0, 0.0], vec![1.0, 0.0]];
        let u = fcm_membership(&[0.5, 0.0], &centers, 2.0);
        assert!((u[0] - 0.5).abs() < 1e-12);
        assert!((u[1] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn single_cluster_membership_is_one() {
        let centers = vec![vec![0.2, 0.8]];
        let u = fcm_membership(&[0.9, 0.1], &centers, 2.0);
        assert_eq!(u, vec![1.0]);
    }

    #[test]
    fn membership_matches_hand_coded_formula() {
        let centers = vec![
            vec![0.1, 0.2, 0.3],
            vec![0.9, 0.8, 0.7],
            vec![0.4, 0.4, 0.4],
            vec![0.2, 0.9, 0.1],
        ];
        let m = 2.0;
        let mut rng = Rng::seed_from(8);
        for _ in 0..50 {
            let x = vec![rng.next_f64(), rng.next_f64(), rng.next_f64()];
            let u = fcm_membership(&x, &centers, m);
            // independent evaluation of u_k = 1 / sum_j (d_k/d_j)^(2/(m-1))
            for (k, &uk) in u.iter().enumerate() {
                let dk = libm::sqrt(dist2(&x, &centers[k]));
                let mut denom = 0.0;
                for c in &centers {
                    let dj = libm::sqrt(dist2(&x, c));
                    denom += libm::pow(dk / dj, 2.0 / (m - 1.0));
                }
                assert!((uk - 1.0 / denom).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn membership_agrees_with_fit_matrix() {
        let mut rng = Rng::seed_from(6);
        let mut points = blob(&mut rng, (0.25, 0.25), 0.1, 50);
        points.extend(blob(&mut rng, (0.75, 0.75), 0.1, 50));
        let model = fcm_fit(&points, &FcmParams::new(2, 3)).unwrap();
        for (x, row) in points.iter().zip(&model.memberships) {
            let fresh = fcm_membership(x, &model.centers, model.fuzzifier);
            for (a, b) in fresh.iter().zip(row) {
                assert!((a - b).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn permuting_points_only_permutes_clusters() {
        let mut rng = Rng::seed_from(7);
        let mut points = blob(&mut rng, (0.15, 0.2), 0.05, 40);
        points.extend(blob(&mut rng, (0.85, 0.8), 0.05, 40));
        let model_a = fcm_fit(&points, &FcmParams::new(2, 11)).unwrap();

        let mut permuted = points.clone();
        permuted.reverse();
        let model_b = fcm_fit(&permuted, &FcmParams::new(2, 11)).unwrap();

        for center in &model_a.centers {
            let nearest = model_b
                .centers
                .iter()
                .map(|c| libm::sqrt(dist2(center, c)))
                .fold(f64::INFINITY, f64::min);
            assert!(nearest < 1e-6, "no matching center for {:?}", center);
        }
    }

    #[test]
    fn three_blob_elbow_suggests_three() {
        let mut rng = Rng::seed_from(12);
        let mut points = blob(&mut rng, (0.1, 0.1), 0.02, 40);
        points.extend(blob(&mut rng, (0.9, 0.1), 0.02, 40));
        points.extend(blob(&mut rng, (0.5, 0.9), 0.02, 40));
        let curve = elbow_curve(&points, 2, 8, &FcmParams::new(2, 99)).unwrap();
        assert_eq!(curve.points.len(), 7);
        for pair in curve.points.windows(2) {
            assert!(pair[1].clusters == pair[0].clusters + 1);
        }
        assert_eq!(curve.knee(), Some(3));
    }

    #[test]
    fn degenerate_range_knees_on_itself() {
        let mut rng = Rng::seed_from(13);
        let mut points = blob(&mut rng, (0.2, 0.2), 0.1, 60);
        points.extend(blob(&mut rng, (0.8, 0.8), 0.1, 60));
        let curve = elbow_curve(&points, 15, 15, &FcmParams::new(2, 4)).unwrap();
        assert_eq!(curve.points.len(), 1);
        assert_eq!(curve.knee(), Some(15));
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        let points = vec![vec![0.0, 0.0], vec![1.0, 1.0], vec![0.5, 0.5]];
        assert!(matches!(
            fcm_fit(&points, &FcmParams::new(4, 0)),
            Err(FcmError::MoreClustersThanPoints { .. })
        ));
        assert!(matches!(fcm_fit(&points, &FcmParams::new(1, 0)), Err(FcmError::TooFewClusters(1))));
        let mut bad = FcmParams::new(2, 0);
        bad.fuzzifier = 1.0;
        assert!(matches!(fcm_fit(&points, &bad), Err(FcmError::InvalidFuzzifier(_))));
        let same = vec![vec![0.5, 0.5]; 10];
        assert!(matches!(fcm_fit(&same, &FcmParams::new(2, 0)), Err(FcmError::DegeneratePoints)));
        assert!(matches!(elbow_curve(&points, 1, 3, &FcmParams::new(2, 0)), Err(FcmError::InvalidRange { .. })));
    }
}
