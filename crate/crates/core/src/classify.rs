//! k-nearest-neighbour prediction of the problem group from feature
//! vectors, with leave-instances-out splitting and permutation-based
//! feature importance.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// Provenance of one feature row.
#[derive(Debug, Clone, PartialEq)]
pub struct RecordMeta {
    pub function_id: u32,
    pub instance: u32,
    pub dimension: usize,
    pub sampler: String,
    pub ordering: String,
    pub seed: u64,
}

/// One labelled feature vector.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureRecord {
    pub features: Vec<f64>,
    pub label: u8,
    pub meta: RecordMeta,
}

/// A labelled dataset with a fixed feature schema. Construction rejects
/// ragged rows and non-finite feature values.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    feature_names: Vec<String>,
    records: Vec<FeatureRecord>,
}

impl Dataset {
    pub fn new(feature_names: Vec<String>, records: Vec<FeatureRecord>) -> Result<Self> {
        let width = feature_names.len();
        for (i, r) in records.iter().enumerate() {
            if r.features.len() != width {
                return Err(Error::Domain(format!(
                    "record {i} has {} features, expected {width}",
                    r.features.len()
                )));
            }
            if r.features.iter().any(|v| !v.is_finite()) {
                return Err(Error::Domain(format!(
                    "record {i} contains a non-finite feature value"
                )));
            }
        }
        Ok(Dataset {
            feature_names,
            records,
        })
    }

    pub fn feature_names(&self) -> &[String] {
        &self.feature_names
    }

    pub fn records(&self) -> &[FeatureRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

/// Per-feature affine transform fitted on training data only.
#[derive(Debug, Clone, PartialEq)]
pub struct Standardizer {
    mean: Vec<f64>,
    std: Vec<f64>,
}

impl Standardizer {
    pub fn fit(train: &Dataset) -> Result<Self> {
        if train.is_empty() {
            return Err(Error::Domain("cannot standardise an empty dataset".into()));
        }
        let width = train.feature_names.len();
        let n = train.len() as f64;
        let mut mean = vec![0.0; width];
        for r in &train.records {
            for (m, v) in mean.iter_mut().zip(&r.features) {
                *m += v;
            }
        }
        for m in &mut mean {
            *m /= n;
        }
        let mut var = vec![0.0; width];
        for r in &train.records {
            for ((v, m), acc) in r.features.iter().zip(&mean).zip(&mut var) {
                *acc += (v - m) * (v - m);
            }
        }
        let std = var.into_iter().map(|v| (v / n).sqrt()).collect();
        Ok(Standardizer { mean, std })
    }

    /// z-score a feature vector; constant features map to 0.
    pub fn transform(&self, features: &[f64]) -> Vec<f64> {
        features
            .iter()
            .zip(self.mean.iter().zip(&self.std))
            .map(|(v, (m, s))| if *s > 0.0 { (v - m) / s } else { 0.0 })
            .collect()
    }

    pub fn mean(&self) -> &[f64] {
        &self.mean
    }

    pub fn std(&self) -> &[f64] {
        &self.std
    }
}

/// Majority label among the `k` nearest training rows (Euclidean distance
/// in the provided, already standardised space). Vote ties break to the
/// candidate with the smallest summed distance, then to the lowest label.
pub fn knn_predict(
    train_features: &[Vec<f64>],
    train_labels: &[u8],
    query: &[f64],
    k: usize,
) -> Result<u8> {
    if train_features.is_empty() || train_features.len() != train_labels.len() {
        return Err(Error::Domain(
            "training features and labels must be non-empty and aligned".into(),
        ));
    }
    if k < 1 || k > train_features.len() {
        return Err(Error::Domain(format!(
            "k={k} out of range for {} training records",
            train_features.len()
        )));
    }
    let mut dists: Vec<(f64, usize)> = train_features
        .iter()
        .enumerate()
        .map(|(i, f)| (crate::ordering::dist_sq(f, query), i))
        .collect();
    dists.sort_by(|a, b| a.partial_cmp(b).expect("finite distances"));

    let mut votes: Vec<(u8, usize, f64)> = Vec::new(); // label, count, summed distance
    for &(d2, i) in dists.iter().take(k) {
        let label = train_labels[i];
        match votes.iter_mut().find(|(l, _, _)| *l == label) {
            Some(v) => {
                v.1 += 1;
                v.2 += d2.sqrt();
            }
            None => votes.push((label, 1, d2.sqrt())),
        }
    }
    votes.sort_by(|a, b| {
        b.1.cmp(&a.1)
            .then(a.2.partial_cmp(&b.2).expect("finite distances"))
            .then(a.0.cmp(&b.0))
    });
    Ok(votes[0].0)
}

/// Split by holding out entire instances: every record whose instance id
/// is listed goes to the test set, the rest to training.
pub fn holdout_split(dataset: &Dataset, test_instances: &[u32]) -> Result<(Dataset, Dataset)> {
    let held: HashSet<u32> = test_instances.iter().copied().collect();
    let (test, train): (Vec<_>, Vec<_>) = dataset
        .records
        .iter()
        .cloned()
        .partition(|r| held.contains(&r.meta.instance));
    if train.is_empty() || test.is_empty() {
        return Err(Error::Domain(format!(
            "holdout split left {} training and {} test records",
            train.len(),
            test.len()
        )));
    }
    Ok((
        Dataset::new(dataset.feature_names.clone(), train)?,
        Dataset::new(dataset.feature_names.clone(), test)?,
    ))
}

/// Fit a standardizer on `train`, then report kNN accuracy on `test`.
pub fn evaluate_accuracy(train: &Dataset, test: &Dataset, k: usize) -> Result<f64> {
    let std = Standardizer::fit(train)?;
    let train_f: Vec<Vec<f64>> = train.records.iter().map(|r| std.transform(&r.features)).collect();
    let train_l: Vec<u8> = train.records.iter().map(|r| r.label).collect();
    let test_f: Vec<Vec<f64>> = test.records.iter().map(|r| std.transform(&r.features)).collect();
    accuracy_of(&train_f, &train_l, &test_f, test, k)
}

fn accuracy_of(
    train_f: &[Vec<f64>],
    train_l: &[u8],
    test_f: &[Vec<f64>],
    test: &Dataset,
    k: usize,
) -> Result<f64> {
    if test.is_empty() {
        return Err(Error::Domain("empty test set".into()));
    }
    let mut correct = 0usize;
    for (f, r) in test_f.iter().zip(&test.records) {
        if knn_predict(train_f, train_l, f, k)? == r.label {
            correct += 1;
        }
    }
    Ok(correct as f64 / test.len() as f64)
}

/// Permutation importance of one feature.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureImportance {
    pub feature: String,
    /// Mean of (permuted accuracy - base accuracy) over the repetitions;
    /// more negative means more salient.
    pub mean_drop: f64,
    pub std_drop: f64,
}

/// Shuffle each test feature column in turn (fresh permutation per
/// repetition), re-evaluate kNN accuracy, and report the mean and standard
/// deviation of the accuracy change per feature.
pub fn permutation_importance<R: Rng>(
    train: &Dataset,
    test: &Dataset,
    k: usize,
    repetitions: usize,
    rng: &mut R,
) -> Result<Vec<FeatureImportance>> {
    if repetitions < 1 {
        return Err(Error::Domain("need at least one repetition".into()));
    }
    let std = Standardizer::fit(train)?;
    let train_f: Vec<Vec<f64>> = train.records.iter().map(|r| std.transform(&r.features)).collect();
    let train_l: Vec<u8> = train.records.iter().map(|r| r.label).collect();
    let test_f: Vec<Vec<f64>> = test.records.iter().map(|r| std.transform(&r.features)).collect();
    let base = accuracy_of(&train_f, &train_l, &test_f, test, k)?;

    let width = train.feature_names.len();
    let mut out = Vec::with_capacity(width);
    for feat in 0..width {
        let mut drops = Vec::with_capacity(repetitions);
        for _ in 0..repetitions {
            let mut column: Vec<f64> = test_f.iter().map(|f| f[feat]).collect();
            column.shuffle(rng);
            let permuted: Vec<Vec<f64>> = test_f
                .iter()
                .zip(&column)
                .map(|(f, &v)| {
                    let mut f = f.clone();
                    f[feat] = v;
                    f
                })
                .collect();
            let acc = accuracy_of(&train_f, &train_l, &permuted, test, k)?;
            drops.push(acc - base);
        }
        let mean = drops.iter().sum::<f64>() / repetitions as f64;
        let var = drops.iter().map(|d| (d - mean) * (d - mean)).sum::<f64>()
            / repetitions as f64;
        out.push(FeatureImportance {
            feature: train.feature_names[feat].clone(),
            mean_drop: mean,
            std_drop: var.sqrt(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::rng_from_seed;

    fn record(features: Vec<f64>, label: u8, instance: u32) -> FeatureRecord {
        FeatureRecord {
            features,
            label,
            meta: RecordMeta {
                function_id: 1,
                instance,
                dimension: 2,
                sampler: "lhs".into(),
                ordering: "hilbert".into(),
                seed: 0,
            },
        }
    }

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("f{i}")).collect()
    }

    #[test]
    fn single_training_record_always_wins() {
        let pred = knn_predict(&[vec![0.0, 0.0]], &[3], &[10.0, -4.0], 1).unwrap();
        assert_eq!(pred, 3);
    }

    #[test]
    fn exact_match_with_k1() {
        let train = vec![vec![0.0, 0.0], vec![5.0, 5.0], vec![9.0, 1.0]];
        let labels = vec![1, 2, 3];
        assert_eq!(knn_predict(&train, &labels, &[5.0, 5.0], 1).unwrap(), 2);
    }

    #[test]
    fn k_larger_than_train_rejected() {
        assert!(knn_predict(&[vec![0.0]], &[1], &[0.0], 2).is_err());
        assert!(knn_predict(&[vec![0.0]], &[1], &[0.0], 0).is_err());
    }

    #[test]
    fn vote_ties_break_by_summed_distance_then_label() {
        // k=2 with one vote each; label 2 is closer.
        let train = vec![vec![0.0], vec![1.0]];
        let labels = vec![5, 2];
        assert_eq!(knn_predict(&train, &labels, &[0.9], 2).unwrap(), 2);
        // Perfectly symmetric: lowest label wins.
        let train = vec![vec![-1.0], vec![1.0]];
        let labels = vec![5, 2];
        assert_eq!(knn_predict(&train, &labels, &[0.0], 2).unwrap(), 2);
    }

    #[test]
    fn separated_blobs_classify_perfectly() {
        let mut rng = rng_from_seed(8);
        let mut records = Vec::new();
        for i in 0..60 {
            let centre = if i % 2 == 0 { 0.0 } else { 10.0 };
            let label = if i % 2 == 0 { 1 } else { 2 };
            let features: Vec<f64> = (0..3)
                .map(|_| centre + 0.1 * rng.random_range(-1.0..1.0))
                .collect();
            records.push(record(features, label, i % 5));
        }
        let data = Dataset::new(names(3), records).unwrap();
        let (train, test) = holdout_split(&data, &[4]).unwrap();
        assert_eq!(evaluate_accuracy(&train, &test, 5).unwrap(), 1.0);
    }

    #[test]
    fn training_set_self_accuracy_is_perfect_with_k1() {
        let mut rng = rng_from_seed(3);
        let records: Vec<FeatureRecord> = (0..40)
            .map(|i| {
                record(
                    (0..4).map(|_| rng.random_range(-1.0..1.0)).collect(),
                    (i % 5) as u8,
                    0,
                )
            })
            .collect();
        let data = Dataset::new(names(4), records).unwrap();
        assert_eq!(evaluate_accuracy(&data, &data, 1).unwrap(), 1.0);
    }

    #[test]
    fn holdout_split_partitions_by_instance() {
        let records: Vec<FeatureRecord> = (1..=5)
            .flat_map(|inst| (0..3).map(move |i| record(vec![i as f64], 1, inst)))
            .collect();
        let data = Dataset::new(names(1), records).unwrap();
        let (train, test) = holdout_split(&data, &[4, 5]).unwrap();
        assert_eq!(train.len() + test.len(), data.len());
        assert!(train.records().iter().all(|r| r.meta.instance <= 3));
        assert!(test.records().iter().all(|r| r.meta.instance >= 4));

        let all: Vec<u32> = (1..=5).collect();
        assert!(holdout_split(&data, &all).is_err());
        assert!(holdout_split(&data, &[]).is_err());
    }

    #[test]
    fn standardizer_uses_training_statistics_only() {
        let train_records = vec![
            record(vec![0.0, 10.0], 1, 1),
            record(vec![4.0, 14.0], 2, 1),
        ];
        let train = Dataset::new(names(2), train_records).unwrap();
        let std = Standardizer::fit(&train).unwrap();
        assert_eq!(std.mean(), &[2.0, 12.0]);
        assert_eq!(std.std(), &[2.0, 2.0]);
        // A test transform must reuse exactly these coefficients.
        assert_eq!(std.transform(&[6.0, 12.0]), vec![2.0, 0.0]);
    }

    #[test]
    fn permuting_a_constant_feature_changes_nothing() {
        let mut rng = rng_from_seed(4);
        let mut records = Vec::new();
        for i in 0..40 {
            let label = (i % 2) as u8 + 1;
            // Feature 0 predicts the label, feature 1 is constant.
            records.push(record(
                vec![label as f64 + 0.01 * rng.random_range(-1.0..1.0), 7.0],
                label,
                i % 4,
            ));
        }
        let data = Dataset::new(names(2), records).unwrap();
        let (train, test) = holdout_split(&data, &[3]).unwrap();
        let imp = permutation_importance(&train, &test, 3, 5, &mut rng).unwrap();
        assert_eq!(imp.len(), 2);
        assert_eq!(imp[1].mean_drop, 0.0);
        assert_eq!(imp[1].std_drop, 0.0);
    }

    #[test]
    fn perfect_predictor_shows_largest_drop() {
        let mut rng = rng_from_seed(6);
        let mut records = Vec::new();
        for i in 0..60 {
            let label = (i % 3) as u8 + 1;
            let features = vec![
                label as f64 * 10.0,                 // perfect predictor
                rng.random_range(-1.0..1.0),         // noise
                rng.random_range(-1.0..1.0),         // noise
            ];
            records.push(record(features, label, i % 5));
        }
        let data = Dataset::new(names(3), records).unwrap();
        let (train, test) = holdout_split(&data, &[4]).unwrap();
        let imp = permutation_importance(&train, &test, 5, 10, &mut rng).unwrap();
        assert!(
            imp[0].mean_drop < imp[1].mean_drop && imp[0].mean_drop < imp[2].mean_drop,
            "{imp:?}"
        );
    }

    #[test]
    fn non_finite_features_rejected() {
        let r = record(vec![f64::NAN], 1, 1);
        assert!(Dataset::new(names(1), vec![r]).is_err());
        let r = record(vec![1.0, 2.0], 1, 1);
        assert!(Dataset::new(names(1), vec![r]).is_err());
    }
}
