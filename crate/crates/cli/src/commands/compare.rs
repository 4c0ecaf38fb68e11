use std::collections::BTreeSet;
use std::fs::{self, File};
use std::io::BufReader;
use std::path::PathBuf;

use log::warn;
use persona::ml::{compare, read_report, EvalRow};

use super::{aligned, pct, run::manifest_path, tsv};
use crate::args::{CompareArgs, TableFormat};
use crate::failure::{usage, usage_msg, CmdResult, Context};
use crate::manifest::RunManifest;

pub fn run(args: &CompareArgs) -> CmdResult {
    if !args.reports.is_dir() {
        return Err(usage_msg(format!("{}: not a directory", args.reports.display())));
    }
    let mut files: Vec<PathBuf> = fs::read_dir(&args.reports)
        .io_context(|| format!("listing {}", args.reports.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|e| e == "tsv"))
        .collect();
    files.sort();
    if files.len() < 2 {
        return Err(usage_msg(format!(
            "{}: compare needs at least two .tsv reports, found {}",
            args.reports.display(),
            files.len()
        )));
    }

    let mut rows: Vec<(String, EvalRow)> = Vec::new();
    let mut datasets = BTreeSet::new();
    for f in &files {
        let file = File::open(f).io_context(|| format!("opening {}", f.display()))?;
        let report = read_report(BufReader::new(file)).map_err(|e| usage(anyhow::Error::from(e).context(f.display().to_string())))?;
        let sidecar = manifest_path(f);
        let dataset = if sidecar.is_file() {
            let text = fs::read_to_string(&sidecar).io_context(|| format!("reading {}", sidecar.display()))?;
            RunManifest::parse(&text)
                .map_err(|e| usage(e.context(format!("parsing {}", sidecar.display()))))?
                .dataset()
        } else {
            warn!("{} has no manifest; grouping it under \"unknown\"", f.display());
            "unknown".to_string()
        };
        datasets.insert(dataset.clone());
        rows.extend(report.into_iter().map(|r| (dataset.clone(), r)));
    }
    if datasets.len() > 1 {
        warn!(
            "reports come from {} corpora ({}); each is compared separately",
            datasets.len(),
            datasets.iter().cloned().collect::<Vec<_>>().join(", ")
        );
    }

    let c = compare(&rows);
    let mut best = vec![["corpus", "trait", "best", "accuracy"].map(String::from).to_vec()];
    for ((dataset, t), (configs, acc)) in &c.best {
        best.push(vec![dataset.clone(), t.to_string(), configs.join(","), pct(*acc)]);
    }
    let mut wins = vec![["config", "wins"].map(String::from).to_vec()];
    let mut tally: Vec<(&String, &f64)> = c.wins.iter().collect();
    tally.sort_by(|a, b| b.1.total_cmp(a.1).then(a.0.cmp(b.0)));
    for (config, w) in tally {
        wins.push(vec![config.clone(), format!("{w:.2}")]);
    }
    let render = |t: &[Vec<String>]| match args.format {
        TableFormat::Text => aligned(t),
        TableFormat::Tsv => tsv(t),
    };
    print!("{}\n{}", render(&best), render(&wins));
    Ok(())
}
