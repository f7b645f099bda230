use std::fmt::Write as _;

use super::FormatError;
use crate::geometry::Point;
use crate::synth::LabeledDataset;

fn csv_err(line: u64, message: impl Into<String>) -> FormatError {
    FormatError::Csv {
        line,
        message: message.into(),
    }
}

/// Parses `x1,...,xn,label[,cluster]` CSV. The cluster column may be empty
/// on negative rows.
pub fn parse_dataset_csv(text: &str) -> Result<LabeledDataset, FormatError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let header = reader.headers().map_err(|e| csv_err(1, e.to_string()))?.clone();
    let names: Vec<&str> = header.iter().collect();
    let has_cluster = names.last() == Some(&"cluster");
    let label_col = names.len().saturating_sub(if has_cluster { 2 } else { 1 });
    if names.get(label_col) != Some(&"label") || label_col == 0 {
        return Err(csv_err(1, "header must be x1,...,xn,label[,cluster]"));
    }
    for (i, name) in names[..label_col].iter().enumerate() {
        if *name != format!("x{}", i + 1) {
            return Err(csv_err(1, format!("expected column `x{}`, found `{name}`", i + 1)));
        }
    }

    let mut points = Vec::new();
    let mut labels = Vec::new();
    let mut ids = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            csv_err(line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != names.len() {
            return Err(csv_err(
                line,
                format!("expected {} columns, found {}", names.len(), record.len()),
            ));
        }
        let coords = record
            .iter()
            .take(label_col)
            .map(|f| {
                f.parse::<f64>()
                    .map_err(|_| csv_err(line, format!("not a number: `{f}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let point = Point::new(coords).map_err(|e| csv_err(line, e.to_string()))?;
        let label = match &record[label_col] {
            "0" => false,
            "1" => true,
            other => return Err(csv_err(line, format!("label must be 0 or 1, found `{other}`"))),
        };
        if has_cluster {
            let field = &record[label_col + 1];
            let id = if field.is_empty() {
                None
            } else {
                Some(
                    field
                        .parse::<i64>()
                        .map_err(|_| csv_err(line, format!("cluster id must be an integer, found `{field}`")))?,
                )
            };
            ids.push(id);
        }
        points.push(point);
        labels.push(label);
    }
    let ids = has_cluster.then_some(ids);
    Ok(LabeledDataset::new(points, labels, ids)?)
}

pub fn dataset_to_csv(dataset: &LabeledDataset) -> String {
    let n = dataset.dim();
    let mut out = String::new();
    let header: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    out.push_str(&header.join(","));
    out.push_str(",label");
    if dataset.cluster_ids().is_some() {
        out.push_str(",cluster");
    }
    out.push('\n');
    for (i, (p, &label)) in dataset.points().iter().zip(dataset.labels()).enumerate() {
        for c in p.coords() {
            let _ = write!(out, "{c},");
        }
        let _ = write!(out, "{}", label as u8);
        if let Some(ids) = dataset.cluster_ids() {
            out.push(',');
            if let Some(id) = ids[i] {
                let _ = write!(out, "{id}");
            }
        }
        out.push('\n');
    }
    out
}
