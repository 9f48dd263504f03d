// Copyright 2026 The mdqft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Text file formats: arrays (JSON), histograms and plot tables (CSV).

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::Deserialize;

use crate::encoding::{ArrayLayout, MdArray};
use crate::error::{Error, Result};
use crate::sim::SampleHistogram;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrayDocument {
    dims: Vec<usize>,
    data: Vec<[f64; 2]>,
}

/// Parses `{"dims": [N1, ..., Nd], "data": [[re, im], ...]}` with data flat,
/// dimension 1 fastest.
pub fn parse_array(text: &str) -> Result<MdArray> {
    let doc: ArrayDocument =
        serde_json::from_str(text).map_err(|e| Error::Io(format!("malformed array document: {e}")))?;
    let layout = ArrayLayout::new(doc.dims)?;
    let data = doc.data.into_iter().map(|[re, im]| Complex64::new(re, im)).collect();
    MdArray::new(layout, data)
}

fn fmt_f64(v: f64) -> String {
    // Debug formatting is the shortest round-trip form and always valid JSON
    // for finite values ("1.0", "-0.25", "1e-10").
    format!("{v:?}")
}

/// Canonical array document, one element per line.
pub fn format_array(array: &MdArray) -> String {
    let dims: Vec<String> = array.layout().dims().iter().map(usize::to_string).collect();
    let mut out = format!("{{\n  \"dims\": [{}],\n  \"data\": [\n", dims.join(", "));
    let n = array.data().len();
    for (i, v) in array.data().iter().enumerate() {
        let sep = if i + 1 == n { "" } else { "," };
        let _ = writeln!(out, "    [{}, {}]{sep}", fmt_f64(v.re), fmt_f64(v.im));
    }
    out.push_str("  ]\n}\n");
    out
}

pub fn read_array(path: &Path) -> Result<MdArray> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    parse_array(&text)
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display())))
}

/// Histogram document: a `shots` line, then one row per observed outcome
/// sorted by index with its per-dimension digits.
pub fn format_histogram(histogram: &SampleHistogram, layout: &ArrayLayout) -> Result<String> {
    let mut out = format!("shots,{}\n", histogram.shots());
    let digits: Vec<String> = (1..=layout.ndim()).map(|i| format!("k{i}")).collect();
    let _ = writeln!(out, "outcome,{},count,frequency", digits.join(","));
    for (&outcome, &count) in histogram.counts() {
        let k: Vec<String> = layout.unflatten(outcome)?.iter().map(usize::to_string).collect();
        let _ = writeln!(
            out,
            "{outcome},{},{count},{}",
            k.join(","),
            fmt_f64(count as f64 / histogram.shots() as f64)
        );
    }
    Ok(out)
}
