//! CSV readers and writers for the experiment artifacts.
//!
//! Every file starts with a provenance comment (`# config-hash=… seed=…
//! version=…`) followed by a header row. Readers skip `#` lines.

use std::fs::File;
use std::io::Write;
use std::path::Path;

use crate::classify::{FeatureImportance, FeatureRecord, RecordMeta};
use crate::coverage::CoverageResult;
use crate::error::{Error, Result};
use crate::features::IcFeatures;
use crate::sampling::OrderedSample;

/// Names of the information-content features, in CSV column order.
pub const IC_FEATURE_NAMES: [&str; 5] = ["eps_s", "eps_max", "eps_ratio", "h_max", "m0"];

/// Provenance stamped into every CSV artifact.
#[derive(Debug, Clone, PartialEq)]
pub struct Provenance {
    pub config_hash: String,
    pub seed: u64,
}

impl Provenance {
    pub fn new(config_hash: impl Into<String>, seed: u64) -> Self {
        Provenance {
            config_hash: config_hash.into(),
            seed,
        }
    }

    fn comment_line(&self) -> String {
        format!(
            "# config-hash={} seed={} version={}\n",
            self.config_hash,
            self.seed,
            env!("CARGO_PKG_VERSION")
        )
    }
}

fn open_with_provenance(path: &Path, provenance: &Provenance) -> Result<csv::Writer<File>> {
    let mut file = File::create(path)?;
    file.write_all(provenance.comment_line().as_bytes())?;
    Ok(csv::Writer::from_writer(file))
}

fn reader(path: &Path) -> Result<csv::Reader<File>> {
    csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_path(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Write a sample as `x0,…,x{d-1}[,y]`, one row per point, row order =
/// sample order.
pub fn write_sample_csv(path: &Path, sample: &OrderedSample, provenance: &Provenance) -> Result<()> {
    let mut w = open_with_provenance(path, provenance)?;
    let d = sample.dimension();
    let mut header: Vec<String> = (0..d).map(|i| format!("x{i}")).collect();
    if sample.fitness.is_some() {
        header.push("y".into());
    }
    w.write_record(&header)?;
    for (i, point) in sample.points.iter().enumerate() {
        let mut row: Vec<String> = point.iter().map(f64::to_string).collect();
        if let Some(f) = &sample.fitness {
            row.push(f[i].to_string());
        }
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

/// Points plus optional fitness column, as read back from a sample CSV.
pub type SampleColumns = (Vec<Vec<f64>>, Option<Vec<f64>>);

/// Read a sample CSV; returns points and the optional fitness column.
/// The spatial-order flag is the caller's to decide.
pub fn read_sample_csv(path: &Path) -> Result<SampleColumns> {
    let mut r = reader(path)?;
    let headers = r.headers()?.clone();
    let has_fitness = headers.iter().next_back() == Some("y");
    let d = headers.len() - usize::from(has_fitness);
    if d == 0 {
        return Err(Error::Io(format!("{}: no coordinate columns", path.display())));
    }
    let mut points = Vec::new();
    let mut fitness = Vec::new();
    for record in r.records() {
        let record = record?;
        let parse = |i: usize| -> Result<f64> {
            record
                .get(i)
                .ok_or_else(|| Error::Io(format!("{}: short row", path.display())))?
                .parse()
                .map_err(|e| Error::Io(format!("{}: bad number: {e}", path.display())))
        };
        let mut p = Vec::with_capacity(d);
        for i in 0..d {
            p.push(parse(i)?);
        }
        points.push(p);
        if has_fitness {
            fitness.push(parse(d)?);
        }
    }
    Ok((points, has_fitness.then_some(fitness)))
}

/// One row of the feature table.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureRow {
    pub function: u32,
    pub group: u8,
    pub instance: u32,
    pub dim: usize,
    pub sampler: String,
    pub ordering: String,
    pub seed: u64,
    pub features: IcFeatures,
}

impl FeatureRow {
    /// View as a classification record (label = group).
    pub fn to_record(&self) -> FeatureRecord {
        FeatureRecord {
            features: vec![
                self.features.eps_s,
                self.features.eps_max,
                self.features.eps_ratio,
                self.features.h_max,
                self.features.m0,
            ],
            label: self.group,
            meta: RecordMeta {
                function_id: self.function,
                instance: self.instance,
                dimension: self.dim,
                sampler: self.sampler.clone(),
                ordering: self.ordering.clone(),
                seed: self.seed,
            },
        }
    }
}

pub fn write_feature_csv(path: &Path, rows: &[FeatureRow], provenance: &Provenance) -> Result<()> {
    let mut w = open_with_provenance(path, provenance)?;
    let mut header = vec![
        "function".to_string(),
        "group".into(),
        "instance".into(),
        "dim".into(),
        "sampler".into(),
        "ordering".into(),
        "seed".into(),
    ];
    header.extend(IC_FEATURE_NAMES.iter().map(|s| s.to_string()));
    w.write_record(&header)?;
    for row in rows {
        w.write_record(&[
            row.function.to_string(),
            row.group.to_string(),
            row.instance.to_string(),
            row.dim.to_string(),
            row.sampler.clone(),
            row.ordering.clone(),
            row.seed.to_string(),
            row.features.eps_s.to_string(),
            row.features.eps_max.to_string(),
            row.features.eps_ratio.to_string(),
            row.features.h_max.to_string(),
            row.features.m0.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_feature_csv(path: &Path) -> Result<Vec<FeatureRow>> {
    let mut r = reader(path)?;
    let mut rows = Vec::new();
    for record in r.records() {
        let record = record?;
        if record.len() != 12 {
            return Err(Error::Io(format!(
                "{}: expected 12 columns, found {}",
                path.display(),
                record.len()
            )));
        }
        let field = |i: usize| record.get(i).unwrap();
        let num = |i: usize| -> Result<f64> {
            field(i)
                .parse()
                .map_err(|e| Error::Io(format!("{}: bad number: {e}", path.display())))
        };
        let int = |i: usize| -> Result<u64> {
            field(i)
                .parse()
                .map_err(|e| Error::Io(format!("{}: bad integer: {e}", path.display())))
        };
        rows.push(FeatureRow {
            function: int(0)? as u32,
            group: int(1)? as u8,
            instance: int(2)? as u32,
            dim: int(3)? as usize,
            sampler: field(4).to_string(),
            ordering: field(5).to_string(),
            seed: int(6)?,
            features: IcFeatures {
                eps_s: num(7)?,
                eps_max: num(8)?,
                eps_ratio: num(9)?,
                h_max: num(10)?,
                m0: num(11)?,
                eps_s_settled: true,
            },
        });
    }
    Ok(rows)
}

pub fn write_coverage_csv(
    path: &Path,
    rows: &[CoverageResult],
    provenance: &Provenance,
) -> Result<()> {
    let mut w = open_with_provenance(path, provenance)?;
    w.write_record(["dimension", "sample_size", "sampler", "run", "hausdorff"])?;
    for r in rows {
        w.write_record(&[
            r.dimension.to_string(),
            r.sample_size.to_string(),
            r.sampler.clone(),
            r.run.to_string(),
            r.hausdorff.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Per-(dimension, size, sampler) mean and standard deviation.
pub fn write_coverage_summary_csv(
    path: &Path,
    rows: &[(usize, usize, String, f64, f64)],
    provenance: &Provenance,
) -> Result<()> {
    let mut w = open_with_provenance(path, provenance)?;
    w.write_record(["dimension", "sample_size", "sampler", "mean", "std"])?;
    for (d, n, sampler, mean, std) in rows {
        w.write_record(&[
            d.to_string(),
            n.to_string(),
            sampler.clone(),
            mean.to_string(),
            std.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_rank_csv(
    path: &Path,
    ranks: &[(String, f64)],
    provenance: &Provenance,
) -> Result<()> {
    let mut w = open_with_provenance(path, provenance)?;
    w.write_record(["sampler", "mean_rank"])?;
    for (name, rank) in ranks {
        w.write_record(&[name.clone(), rank.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

/// `mode,strategy,d,n,run,seconds` timing rows.
pub fn write_timing_csv(
    path: &Path,
    rows: &[(String, String, usize, usize, usize, f64)],
    provenance: &Provenance,
) -> Result<()> {
    let mut w = open_with_provenance(path, provenance)?;
    w.write_record(["mode", "strategy", "d", "n", "run", "seconds"])?;
    for (mode, strategy, d, n, run, seconds) in rows {
        w.write_record(&[
            mode.clone(),
            strategy.clone(),
            d.to_string(),
            n.to_string(),
            run.to_string(),
            seconds.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_steps_csv(path: &Path, steps: &[f64], provenance: &Provenance) -> Result<()> {
    let mut w = open_with_provenance(path, provenance)?;
    w.write_record(["step_index", "distance"])?;
    for (i, s) in steps.iter().enumerate() {
        w.write_record(&[i.to_string(), s.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_manifest_csv(
    path: &Path,
    functions: &[crate::benchmarks::ObjectiveFunction],
    provenance: &Provenance,
) -> Result<()> {
    let mut w = open_with_provenance(path, provenance)?;
    w.write_record(["id", "name", "group", "dimension", "instance"])?;
    for f in functions {
        w.write_record(&[
            f.id().to_string(),
            f.name().to_string(),
            f.group().to_string(),
            f.dimension().to_string(),
            f.instance().to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_importance_csv(
    path: &Path,
    importances: &[FeatureImportance],
    provenance: &Provenance,
) -> Result<()> {
    let mut w = open_with_provenance(path, provenance)?;
    w.write_record(["feature", "mean_drop", "std_drop"])?;
    for imp in importances {
        w.write_record(&[
            imp.feature.clone(),
            imp.mean_drop.to_string(),
            imp.std_drop.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Accuracy per grouping key (e.g. sampler/ordering combination).
pub fn write_accuracy_csv(
    path: &Path,
    rows: &[(String, String, f64)],
    provenance: &Provenance,
) -> Result<()> {
    let mut w = open_with_provenance(path, provenance)?;
    w.write_record(["sampler", "ordering", "accuracy"])?;
    for (sampler, ordering, acc) in rows {
        w.write_record(&[sampler.clone(), ordering.clone(), acc.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use tempfile::tempdir;

    fn prov() -> Provenance {
        Provenance::new("deadbeef", 42)
    }

    #[test]
    fn sample_round_trip_with_fitness() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("s.csv");
        let sample = OrderedSample::new(vec![vec![0.5, -1.25], vec![3.0, 4.5]], true)
            .with_fitness(vec![10.0, -2.5])
            .unwrap();
        write_sample_csv(&path, &sample, &prov()).unwrap();
        let (points, fitness) = read_sample_csv(&path).unwrap();
        assert_eq!(points, sample.points);
        assert_eq!(fitness.unwrap(), vec![10.0, -2.5]);

        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("# config-hash=deadbeef seed=42 version="));
        assert!(text.lines().nth(1).unwrap().starts_with("x0,x1,y"));
    }

    #[test]
    fn sample_round_trip_without_fitness() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("s.csv");
        let sample = OrderedSample::new(vec![vec![1.0], vec![2.0], vec![3.0]], false);
        write_sample_csv(&path, &sample, &prov()).unwrap();
        let (points, fitness) = read_sample_csv(&path).unwrap();
        assert_eq!(points.len(), 3);
        assert!(fitness.is_none());
    }

    #[test]
    fn feature_rows_round_trip() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("f.csv");
        let rows = vec![FeatureRow {
            function: 3,
            group: 2,
            instance: 1,
            dim: 5,
            sampler: "hilbert".into(),
            ordering: "none".into(),
            seed: 9,
            features: IcFeatures {
                eps_s: 1.5,
                eps_max: 0.01,
                eps_ratio: -2.0,
                h_max: 0.75,
                m0: 0.5,
                eps_s_settled: true,
            },
        }];
        write_feature_csv(&path, &rows, &prov()).unwrap();
        let back = read_feature_csv(&path).unwrap();
        assert_eq!(back, rows);
        let rec = back[0].to_record();
        assert_eq!(rec.label, 2);
        assert_eq!(rec.features, vec![1.5, 0.01, -2.0, 0.75, 0.5]);
    }

    #[test]
    fn missing_file_is_io_error() {
        assert!(matches!(
            read_sample_csv(Path::new("/nonexistent/x.csv")),
            Err(Error::Io(_))
        ));
    }
}
