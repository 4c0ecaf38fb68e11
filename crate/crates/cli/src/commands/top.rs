use persona::corpus::labels_for;
use persona::features::FeatureExtractor;
use persona::ml::averaged_ranking;

use super::{aligned, tsv};
use crate::args::{ResourceArgs, TableFormat, TopArgs};
use crate::failure::{computation, usage, CmdResult};
use crate::load;

pub fn run(resources: &ResourceArgs, args: &TopArgs) -> CmdResult {
    let config = args.pipeline.config()?;
    load::require_file(&args.corpus.corpus)?;
    let lexicon = load::lexicon(resources, config.with_sentiment)?;
    let corpus = load::corpus_from_args(&args.corpus)?;
    let extractor = FeatureExtractor::new(&lexicon, config).map_err(usage)?;
    let docs = load::annotate(&corpus, &extractor);
    let labels = labels_for(&corpus, args.r#trait);
    let ranked = averaged_ranking(&docs, &labels, &extractor, &args.cv.options()).map_err(computation)?;

    let mut rows = vec![["rank", "feature", "chi2", "chi2/N", "class"].map(String::from).to_vec()];
    if args.format == TableFormat::Tsv {
        rows[0][0] = "#rank".into();
    }
    for (k, f) in ranked.iter().take(args.n).enumerate() {
        rows.push(vec![
            (k + 1).to_string(),
            f.name.clone(),
            format!("{:.4}", f.mean_chi2),
            format!("{:.4}", f.mean_normalized),
            if f.mean_signed > 0.0 { "+" } else { "-" }.to_string(),
        ]);
    }
    println!("# {} {} over {} folds", args.r#trait, config.name(), args.cv.folds);
    print!(
        "{}",
        match args.format {
            TableFormat::Text => aligned(&rows),
            TableFormat::Tsv => tsv(&rows),
        }
    );
    Ok(())
}
