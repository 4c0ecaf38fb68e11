use persona::corpus::stats;

use super::{aligned, pct, tsv};
use crate::args::{ResourceArgs, StatsArgs, TableFormat};
use crate::failure::{usage, CmdResult};
use crate::load;

pub fn run(resources: &ResourceArgs, args: &StatsArgs) -> CmdResult {
    for path in &args.corpus {
        load::require_file(path)?;
    }
    let lexicon = load::lexicon(resources, false)?;
    let mut rows = vec![match args.format {
        TableFormat::Text => vec!["corpus", "#users", "#sen/user", "#word/user", "non-standard%"],
        TableFormat::Tsv => vec!["#corpus", "users", "sentences_per_user", "words_per_user", "non_standard_pct"],
    }
    .into_iter()
    .map(String::from)
    .collect()];
    for path in &args.corpus {
        let corpus = load::corpus(path, args.corpus_format, args.columns.as_deref())?;
        let s = stats(&corpus, &lexicon).map_err(usage)?;
        rows.push(vec![
            load::corpus_name(path),
            s.n_users.to_string(),
            format!("{:.2}", s.sentences_per_user),
            format!("{:.2}", s.words_per_user),
            pct(s.non_standard_ratio),
        ]);
    }
    print!(
        "{}",
        match args.format {
            TableFormat::Text => aligned(&rows),
            TableFormat::Tsv => tsv(&rows),
        }
    );
    Ok(())
}
