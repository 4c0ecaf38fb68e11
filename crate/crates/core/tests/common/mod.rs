#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::OnceLock;

use persona::lexicon::Lexicon;

fn workspace() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

/// `PERSONA_WORDNET_DIR`, else `<workspace>/resources/wordnet`, when present.
pub fn wordnet_dir() -> Option<PathBuf> {
    let dir = std::env::var_os("PERSONA_WORDNET_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| workspace().join("resources/wordnet"));
    dir.join("index.noun").is_file().then_some(dir)
}

/// `PERSONA_SWN_PATH`, else `<workspace>/resources/SentiWordNet_3.0.0.txt`.
pub fn swn_path() -> Option<PathBuf> {
    let path = std::env::var_os("PERSONA_SWN_PATH")
        .map(PathBuf::from)
        .unwrap_or_else(|| workspace().join("resources/SentiWordNet_3.0.0.txt"));
    path.is_file().then_some(path)
}

/// WordNet plus SentiWordNet, loaded once per test binary.
pub fn lexicon() -> Option<&'static Lexicon> {
    static LEX: OnceLock<Option<Lexicon>> = OnceLock::new();
    LEX.get_or_init(|| {
        let (dir, swn) = match (wordnet_dir(), swn_path()) {
            (Some(d), Some(s)) => (d, s),
            _ => {
                eprintln!("WordNet/SentiWordNet not found; run scripts/fetch_resources.sh");
                return None;
            }
        };
        let lex = Lexicon::load_wordnet(dir).expect("WordNet loads");
        Some(lex.with_sentiwordnet(swn).expect("SentiWordNet loads").0)
    })
    .as_ref()
}

/// Returns from the test when resources are missing.
#[macro_export]
macro_rules! require_lexicon {
    () => {
        match common::lexicon() {
            Some(l) => l,
            None => return,
        }
    };
}
