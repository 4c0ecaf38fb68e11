use std::fs::{self, File};
use std::io::BufReader;
use std::path::{Path, PathBuf};

use log::info;
use persona::corpus::{load_essays, load_generic_csv, read_cache, ColumnMap, LabeledDocument};
use persona::features::{AnnotatedDocument, FeatureExtractor};
use persona::lexicon::Lexicon;
use persona::textproc::tokenize;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::args::{CorpusArgs, CorpusFormat, ResourceArgs};
use crate::failure::{usage, usage_msg, CmdResult, Context};

pub fn wordnet_dir(resources: &ResourceArgs) -> CmdResult<&Path> {
    resources
        .wordnet_dir
        .as_deref()
        .ok_or_else(|| usage_msg("no WordNet directory given: pass --wordnet-dir or set PERSONA_WORDNET_DIR"))
}

pub fn sentiwordnet_path(resources: &ResourceArgs) -> CmdResult<&Path> {
    resources
        .sentiwordnet
        .as_deref()
        .ok_or_else(|| usage_msg("--sentiment needs SentiWordNet: pass --sentiwordnet or set PERSONA_SWN_PATH"))
}

/// Loads WordNet, plus SentiWordNet when `with_sentiment` is set.
pub fn lexicon(resources: &ResourceArgs, with_sentiment: bool) -> CmdResult<Lexicon> {
    let dir = wordnet_dir(resources)?;
    if !dir.is_dir() {
        return Err(usage_msg(format!("WordNet directory {} does not exist", dir.display())));
    }
    let lexicon = Lexicon::load_wordnet(dir).map_err(usage)?;
    info!("loaded {} synsets from {}", lexicon.synset_count(), dir.display());
    if !with_sentiment {
        return Ok(lexicon);
    }
    let path = sentiwordnet_path(resources)?;
    require_file(path)?;
    let (lexicon, loaded) = lexicon.with_sentiwordnet(path).map_err(usage)?;
    info!("loaded SentiWordNet from {}: {loaded:?}", path.display());
    Ok(lexicon)
}

pub fn require_file(path: &Path) -> CmdResult {
    if path.is_file() {
        Ok(())
    } else {
        Err(usage_msg(format!("{}: no such file", path.display())))
    }
}

pub fn corpus(path: &Path, format: CorpusFormat, columns: Option<&Path>) -> CmdResult<Vec<LabeledDocument>> {
    require_file(path)?;
    let docs = match format {
        CorpusFormat::Essays => load_essays(path).map_err(usage)?,
        CorpusFormat::Mypersonality => load_generic_csv(path, &ColumnMap::mypersonality()).map_err(usage)?,
        CorpusFormat::Columns => {
            let columns = columns.ok_or_else(|| usage_msg("--corpus-format columns needs --columns FILE"))?;
            require_file(columns)?;
            let text = fs::read_to_string(columns).io_context(|| format!("reading {}", columns.display()))?;
            let map = ColumnMap::from_config(&text).map_err(|e| usage_msg(format!("{}: {e}", columns.display())))?;
            load_generic_csv(path, &map).map_err(usage)?
        }
        CorpusFormat::Cache => {
            let file = File::open(path).io_context(|| format!("opening {}", path.display()))?;
            read_cache(BufReader::new(file), &corpus_name(path)).map_err(usage)?
        }
    };
    if docs.is_empty() {
        return Err(usage_msg(format!("{}: corpus has no documents", path.display())));
    }
    info!("loaded {} users from {}", docs.len(), path.display());
    Ok(docs)
}

pub fn corpus_from_args(args: &CorpusArgs) -> CmdResult<Vec<LabeledDocument>> {
    corpus(&args.corpus, args.corpus_format, args.columns.as_deref())
}

/// File stem, used to label a corpus in tables.
pub fn corpus_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Tokenizes and annotates every document in parallel, keeping corpus order.
pub fn annotate(corpus: &[LabeledDocument], extractor: &FeatureExtractor) -> Vec<AnnotatedDocument> {
    let docs: Vec<AnnotatedDocument> = corpus
        .par_iter()
        .map(|d| extractor.annotate(&tokenize(&d.text)))
        .collect();
    info!("annotated {} documents for {}", docs.len(), extractor.config().base);
    docs
}

pub fn sha256_file(path: &Path) -> CmdResult<String> {
    let bytes = fs::read(path).io_context(|| format!("reading {}", path.display()))?;
    Ok(hex::encode(Sha256::digest(&bytes)))
}

/// Digest over the names and contents of every file in `dir`, in name order.
pub fn sha256_dir(dir: &Path) -> CmdResult<String> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .io_context(|| format!("listing {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    let mut hasher = Sha256::new();
    for f in files {
        let bytes = fs::read(&f).io_context(|| format!("reading {}", f.display()))?;
        hasher.update(f.file_name().unwrap_or_default().as_encoded_bytes());
        hasher.update([0]);
        hasher.update((bytes.len() as u64).to_le_bytes());
        hasher.update(&bytes);
    }
    Ok(hex::encode(hasher.finalize()))
}
