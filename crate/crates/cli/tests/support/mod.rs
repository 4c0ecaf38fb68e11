//! Helpers shared by the CLI test targets: resource discovery, a seeded
//! synthetic corpus and a wrapper around the built binary.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn wordnet_dir() -> Option<PathBuf> {
    let dir = std::env::var_os("PERSONA_WORDNET_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| workspace_root().join("resources/wordnet"));
    dir.join("index.noun").is_file().then_some(dir)
}

pub fn swn_path() -> Option<PathBuf> {
    let path = std::env::var_os("PERSONA_SWN_PATH")
        .map(PathBuf::from)
        .unwrap_or_else(|| workspace_root().join("resources/SentiWordNet_3.0.0.txt"));
    path.is_file().then_some(path)
}

/// Runs the binary with resource variables cleared, so only flags count.
pub fn persona(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_persona"))
        .args(args)
        .env_remove("PERSONA_WORDNET_DIR")
        .env_remove("PERSONA_SWN_PATH")
        .env("RUST_LOG", "warn")
        .output()
        .expect("binary runs")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

const EXTRAVERT: [&str; 10] = ["love", "party", "friends", "music", "dance", "fun", "talk", "people", "laugh", "exciting"];
const INTROVERT: [&str; 10] = ["alone", "quiet", "read", "book", "think", "worry", "tired", "home", "study", "sleep"];
const FILLER: [&str; 16] = [
    "the", "i", "a", "day", "went", "to", "was", "it", "my", "we", "so", "really", "bank", "plant", "lol", "tmrw",
];

/// Essays-format CSV of `users` authors. Extraversion is signalled by word
/// choice with label noise; the other traits are drawn independently.
pub fn synthetic_essays(users: usize, seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::from("#AUTHID,TEXT,cEXT,cNEU,cAGR,cCON,cOPN\n");
    for k in 0..users {
        let ext = rng.gen_bool(0.5);
        let mut sentences = Vec::new();
        for _ in 0..rng.gen_range(3..8) {
            let len = rng.gen_range(4..14);
            let words: Vec<&str> = (0..len)
                .map(|_| {
                    if rng.gen_bool(0.35) {
                        let own = rng.gen_bool(0.75) == ext;
                        *(if own { &EXTRAVERT[..] } else { &INTROVERT[..] }).choose(&mut rng).unwrap()
                    } else {
                        *FILLER.choose(&mut rng).unwrap()
                    }
                })
                .collect();
            sentences.push(words.join(" ") + if rng.gen_bool(0.5) { "." } else { "!" });
        }
        let yn = |b: bool| if b { "y" } else { "n" };
        let others: Vec<&str> = (0..4).map(|_| yn(rng.gen_bool(0.5))).collect();
        out.push_str(&format!("u{k:04},\"{}\",{},{}\n", sentences.join(" "), yn(ext), others.join(",")));
    }
    out
}

/// Per-trait cue words: `(yes words, no words)` in trait order.
pub const TRAIT_CUES: [([&str; 4], [&str; 4]); 5] = [
    (["party", "friends", "dance", "laugh"], ["alone", "quiet", "read", "sleep"]),
    (["worry", "nervous", "fear", "cry"], ["calm", "relaxed", "steady", "peace"]),
    (["kind", "help", "thank", "care"], ["hate", "fight", "blame", "rude"]),
    (["plan", "work", "finish", "schedule"], ["forget", "late", "mess", "lazy"]),
    (["art", "poetry", "imagine", "idea"], ["routine", "usual", "plain", "habit"]),
];

/// Essays-format CSV in which every trait is signalled by its own cue
/// words, with label noise.
pub fn synthetic_all_traits(users: usize, seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::from("#AUTHID,TEXT,cEXT,cNEU,cAGR,cCON,cOPN\n");
    for k in 0..users {
        let labels: Vec<bool> = (0..5).map(|_| rng.gen_bool(0.5)).collect();
        let mut sentences = Vec::new();
        for _ in 0..rng.gen_range(4..9) {
            let len = rng.gen_range(5..15);
            let words: Vec<&str> = (0..len)
                .map(|_| {
                    if rng.gen_bool(0.4) {
                        let t = rng.gen_range(0..5);
                        let (yes, no) = &TRAIT_CUES[t];
                        let own = rng.gen_bool(0.75) == labels[t];
                        *(if own { &yes[..] } else { &no[..] }).choose(&mut rng).unwrap()
                    } else {
                        *FILLER.choose(&mut rng).unwrap()
                    }
                })
                .collect();
            sentences.push(words.join(" ") + ".");
        }
        let yn: Vec<&str> = labels.iter().map(|&b| if b { "y" } else { "n" }).collect();
        out.push_str(&format!("u{k:04},\"{}\",{}\n", sentences.join(" "), yn.join(",")));
    }
    out
}
