//! Parser for the WordNet 3.0 database files (`wndb(5)`, `lexnames(5)`).

use std::fs;
use std::path::Path;

use super::builder::LexiconBuilder;
use super::{Lexicon, LexiconError, PartOfSpeech, Synset, SynsetId};

/// Files that must be present in a `dict/` directory, in the order they are
/// reported when missing.
pub const REQUIRED_FILES: [&str; 9] = [
    "index.noun",
    "index.verb",
    "index.adj",
    "index.adv",
    "data.noun",
    "data.verb",
    "data.adj",
    "data.adv",
    "lexnames",
];

pub fn load_wordnet(dir: &Path) -> Result<Lexicon, LexiconError> {
    let missing: Vec<String> = REQUIRED_FILES
        .iter()
        .filter(|f| !dir.join(f).is_file())
        .map(|f| f.to_string())
        .collect();
    if !missing.is_empty() {
        return Err(LexiconError::MissingFiles {
            dir: dir.to_path_buf(),
            files: missing,
        });
    }

    let mut builder = LexiconBuilder::without_lexnames();
    parse_lexnames(&dir.join("lexnames"), &mut builder)?;
    for pos in PartOfSpeech::INDEXED {
        parse_data(&dir.join(format!("data.{}", pos.file_suffix())), pos, &mut builder)?;
    }
    for pos in PartOfSpeech::INDEXED {
        parse_index(&dir.join(format!("index.{}", pos.file_suffix())), pos, &mut builder)?;
    }
    for pos in PartOfSpeech::INDEXED {
        let path = dir.join(format!("{}.exc", pos.file_suffix()));
        if path.is_file() {
            parse_exceptions(&path, pos, &mut builder)?;
        }
    }
    let sense_index = dir.join("index.sense");
    if sense_index.is_file() {
        parse_sense_index(&sense_index, &mut builder)?;
    }
    builder.build()
}

fn read(path: &Path) -> Result<String, LexiconError> {
    let bytes = fs::read(path).map_err(|source| LexiconError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    String::from_utf8(bytes).map_err(|e| LexiconError::Malformed {
        file: file_name(path),
        line: 0,
        message: format!("not UTF-8: {e}"),
    })
}

fn file_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

struct LineCtx {
    file: String,
    line: usize,
}

impl LineCtx {
    fn err(&self, message: impl Into<String>) -> LexiconError {
        LexiconError::Malformed {
            file: self.file.clone(),
            line: self.line,
            message: message.into(),
        }
    }
}

/// Yields `(byte_offset, line_number, line)`, skipping license lines
/// (two leading spaces) and blank lines.
fn records(text: &str) -> impl Iterator<Item = (usize, usize, &str)> {
    let mut offset = 0usize;
    text.split_inclusive('\n').enumerate().filter_map(move |(k, raw)| {
        let start = offset;
        offset += raw.len();
        let line = raw.trim_end_matches(['\n', '\r']);
        if line.starts_with("  ") || line.trim().is_empty() {
            None
        } else {
            Some((start, k + 1, line))
        }
    })
}

fn parse_lexnames(path: &Path, b: &mut LexiconBuilder) -> Result<(), LexiconError> {
    let text = read(path)?;
    let file = file_name(path);
    for (_, line_no, line) in records(&text) {
        let ctx = LineCtx { file: file.clone(), line: line_no };
        let mut fields = line.split_whitespace();
        let num: u8 = fields
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or_else(|| ctx.err("expected lexicographer file number"))?;
        let name = fields.next().ok_or_else(|| ctx.err("expected lexicographer file name"))?;
        b.lexname(num, name);
    }
    Ok(())
}

fn parse_data(path: &Path, pos: PartOfSpeech, b: &mut LexiconBuilder) -> Result<(), LexiconError> {
    let text = read(path)?;
    let file = file_name(path);
    for (byte_offset, line_no, line) in records(&text) {
        let ctx = LineCtx { file: file.clone(), line: line_no };
        b.insert_synset(parse_data_line(line, byte_offset, pos, &ctx)?);
    }
    Ok(())
}

fn parse_data_line(
    line: &str,
    byte_offset: usize,
    file_pos: PartOfSpeech,
    ctx: &LineCtx,
) -> Result<Synset, LexiconError> {
    let (head, gloss) = match line.split_once(" | ") {
        Some((h, g)) => (h, g.trim()),
        None => (line.trim_end_matches(" |"), ""),
    };
    let mut fields = head.split_whitespace();
    let mut next = |what: &str| fields.next().ok_or_else(|| ctx.err(format!("missing {what}")));

    let offset: u32 = next("synset offset")?
        .parse()
        .map_err(|_| ctx.err("synset offset is not a number"))?;
    if offset as usize != byte_offset {
        return Err(ctx.err(format!(
            "synset offset {offset} does not match its byte position {byte_offset}"
        )));
    }
    let lexfile_num: u8 = next("lex_filenum")?
        .parse()
        .map_err(|_| ctx.err("lex_filenum is not a number"))?;
    let ss_type = next("ss_type")?;
    let ss_type = ss_type
        .chars()
        .next()
        .and_then(PartOfSpeech::from_letter)
        .filter(|p| p.normalized() == file_pos && ss_type.len() == 1)
        .ok_or_else(|| ctx.err(format!("unexpected ss_type {ss_type:?}")))?;
    let w_cnt = usize::from_str_radix(next("w_cnt")?, 16).map_err(|_| ctx.err("w_cnt is not hexadecimal"))?;
    if w_cnt == 0 {
        return Err(ctx.err("synset has no words"));
    }
    let mut lemmas = Vec::with_capacity(w_cnt);
    for _ in 0..w_cnt {
        let word = next("word")?;
        next("lex_id")?;
        lemmas.push(strip_adjective_marker(word).to_lowercase());
    }
    if gloss.is_empty() {
        return Err(ctx.err("synset has no gloss"));
    }
    Ok(Synset {
        id: SynsetId::new(file_pos, offset),
        ss_type,
        lemmas,
        gloss: gloss.to_string(),
        lexfile_num,
    })
}

/// `galore(ip)` → `galore`.
fn strip_adjective_marker(word: &str) -> &str {
    match word.find('(') {
        Some(k) if word.ends_with(')') => &word[..k],
        _ => word,
    }
}

fn parse_index(path: &Path, pos: PartOfSpeech, b: &mut LexiconBuilder) -> Result<(), LexiconError> {
    let text = read(path)?;
    let file = file_name(path);
    for (_, line_no, line) in records(&text) {
        let ctx = LineCtx { file: file.clone(), line: line_no };
        let entry = parse_index_line(line, pos, &ctx)?;
        for id in &entry.offsets {
            if !b.has_synset(*id) {
                return Err(ctx.err(format!("offset {:08} not found in data.{}", id.offset(), pos.file_suffix())));
            }
        }
        b.sense(&entry.lemma, pos, &entry.offsets)
            .tagged_sense_count(entry.tagsense_cnt);
    }
    Ok(())
}

/// Fields of one `index.<pos>` line that the lexicon keeps.
#[derive(Clone, Debug, PartialEq)]
struct IndexLine {
    pub lemma: String,
    pub offsets: Vec<SynsetId>,
    pub tagsense_cnt: u32,
}

fn parse_index_line(line: &str, pos: PartOfSpeech, ctx: &LineCtx) -> Result<IndexLine, LexiconError> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| fields.next().ok_or_else(|| ctx.err(format!("missing {what}")));
    let num = |s: &str, what: &str| s.parse::<u32>().map_err(|_| ctx.err(format!("{what} is not a number")));

    let lemma = next("lemma")?.to_string();
    let file_pos = next("pos")?;
    if PartOfSpeech::from_letter(file_pos.chars().next().unwrap_or(' ')).map(|p| p.normalized()) != Some(pos)
        || file_pos.len() != 1
    {
        return Err(ctx.err(format!("pos {file_pos:?} does not match the file")));
    }
    let synset_cnt = num(next("synset_cnt")?, "synset_cnt")? as usize;
    let p_cnt = num(next("p_cnt")?, "p_cnt")?;
    for _ in 0..p_cnt {
        next("pointer symbol")?;
    }
    let sense_cnt = num(next("sense_cnt")?, "sense_cnt")? as usize;
    let tagsense_cnt = num(next("tagsense_cnt")?, "tagsense_cnt")?;
    let mut offsets = Vec::with_capacity(synset_cnt);
    for _ in 0..synset_cnt {
        let id = SynsetId::new(pos, num(next("synset offset")?, "synset offset")?);
        if offsets.contains(&id) {
            return Err(ctx.err(format!("duplicate synset offset {:08}", id.offset())));
        }
        offsets.push(id);
    }
    if fields.next().is_some() {
        return Err(ctx.err("trailing fields after synset offsets"));
    }
    if synset_cnt == 0 || sense_cnt != synset_cnt {
        return Err(ctx.err(format!("sense_cnt {sense_cnt} disagrees with synset_cnt {synset_cnt}")));
    }
    Ok(IndexLine { lemma, offsets, tagsense_cnt })
}

fn parse_exceptions(path: &Path, pos: PartOfSpeech, b: &mut LexiconBuilder) -> Result<(), LexiconError> {
    let text = read(path)?;
    let file = file_name(path);
    for (_, line_no, line) in records(&text) {
        let mut fields = line.split_whitespace();
        let surface = fields.next().unwrap_or_default();
        let bases: Vec<&str> = fields.collect();
        if bases.is_empty() {
            return Err(LineCtx { file: file.clone(), line: line_no }.err("exception without a base form"));
        }
        b.exception(pos, surface, &bases);
    }
    Ok(())
}

/// `index.sense`: `lemma%ss_type:lexfile:lex_id:head:head_id offset sense_number tag_cnt`.
fn parse_sense_index(path: &Path, b: &mut LexiconBuilder) -> Result<(), LexiconError> {
    let text = read(path)?;
    let file = file_name(path);
    for (_, line_no, line) in records(&text) {
        let ctx = LineCtx { file: file.clone(), line: line_no };
        let mut fields = line.split_whitespace();
        let key = fields.next().ok_or_else(|| ctx.err("missing sense key"))?;
        let _offset = fields.next();
        let sense_number: usize = fields
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or_else(|| ctx.err("missing sense number"))?;
        let tag_cnt: u32 = fields
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or_else(|| ctx.err("missing tag count"))?;
        let (lemma, rest) = key.split_once('%').ok_or_else(|| ctx.err("sense key without '%'"))?;
        let pos = match rest.as_bytes().first() {
            Some(b'1') => PartOfSpeech::Noun,
            Some(b'2') => PartOfSpeech::Verb,
            Some(b'3') | Some(b'5') => PartOfSpeech::Adjective,
            Some(b'4') => PartOfSpeech::Adverb,
            _ => return Err(ctx.err(format!("bad ss_type in sense key {key:?}"))),
        };
        if let Some(entry) = b.sense_entry_mut(lemma, pos) {
            let n = entry.synsets.len();
            if sense_number == 0 || sense_number > n {
                continue;
            }
            let counts = entry.tag_counts.get_or_insert_with(|| vec![0; n]);
            counts[sense_number - 1] = tag_cnt;
        }
    }
    Ok(())
}
