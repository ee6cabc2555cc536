//! JSON files for received words and messages.
//!
//! Both carry the code parameters so a file is self-describing. A field
//! element is written as its coefficient vector over `F_p`, constant term
//! first, of length `2e` where `q = p^e`.

use anyhow::{ensure, Context};
use ihpd_core::code::{Code, InterleavedWord};
use ihpd_core::gf::{Fe, Field};
use ihpd_core::hermitian::Curve;
use serde::{Deserialize, Serialize};

type ElementRows = Vec<Vec<Vec<u32>>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeParams {
    pub q: u32,
    #[serde(rename = "mH")]
    pub m_h: usize,
    pub h: usize,
}

impl CodeParams {
    pub fn of(code: &Code) -> Self {
        CodeParams {
            q: code.q() as u32,
            m_h: code.m_h(),
            h: code.h(),
        }
    }

    pub fn build(&self) -> anyhow::Result<Code> {
        let field = Field::for_q(self.q)?;
        Ok(Code::new(Curve::new(field), self.m_h, self.h)?)
    }
}

/// `h` rows of `n` symbols.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WordFile {
    #[serde(flatten)]
    pub params: CodeParams,
    pub rows: ElementRows,
}

/// `h` messages of `k` coefficients, in the order of [`Code::basis`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MessageFile {
    #[serde(flatten)]
    pub params: CodeParams,
    pub messages: ElementRows,
}

fn encode_rows(f: &Field, rows: &[Vec<Fe>]) -> ElementRows {
    rows.iter()
        .map(|r| r.iter().map(|&a| f.coeffs(a)).collect())
        .collect()
}

fn decode_rows(
    f: &Field,
    rows: &ElementRows,
    h: usize,
    len: usize,
    what: &str,
) -> anyhow::Result<Vec<Vec<Fe>>> {
    ensure!(
        rows.len() == h,
        "expected {h} {what} rows, found {}",
        rows.len()
    );
    rows.iter()
        .enumerate()
        .map(|(r, row)| {
            ensure!(
                row.len() == len,
                "{what} row {r} has {} entries, expected {len}",
                row.len()
            );
            row.iter()
                .enumerate()
                .map(|(c, e)| {
                    f.from_coeffs(e)
                        .with_context(|| format!("{what} row {r}, entry {c}: {e:?}"))
                })
                .collect()
        })
        .collect()
}

impl WordFile {
    pub fn new(code: &Code, word: &InterleavedWord) -> Self {
        WordFile {
            params: CodeParams::of(code),
            rows: encode_rows(code.field(), &word.rows),
        }
    }

    pub fn to_word(&self, code: &Code) -> anyhow::Result<InterleavedWord> {
        ensure!(
            self.params == CodeParams::of(code),
            "word parameters do not match the code"
        );
        Ok(InterleavedWord {
            rows: decode_rows(code.field(), &self.rows, code.h(), code.n(), "word")?,
        })
    }
}

impl MessageFile {
    pub fn new(code: &Code, messages: &[Vec<Fe>]) -> Self {
        MessageFile {
            params: CodeParams::of(code),
            messages: encode_rows(code.field(), messages),
        }
    }

    pub fn to_messages(&self, code: &Code) -> anyhow::Result<Vec<Vec<Fe>>> {
        ensure!(
            self.params == CodeParams::of(code),
            "message parameters do not match the code"
        );
        decode_rows(code.field(), &self.messages, code.h(), code.k(), "message")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn code() -> Code {
        CodeParams { q: 3, m_h: 8, h: 2 }.build().unwrap()
    }

    #[test]
    fn word_round_trip() {
        let c = code();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let word = c.encode(&c.random_messages(&mut rng)).unwrap();
        let file = WordFile::new(&c, &word);
        let text = serde_json::to_string(&file).unwrap();
        assert!(text.starts_with(r#"{"q":3,"mH":8,"h":2,"rows":[[["#));
        let back: WordFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_word(&c).unwrap(), word);
    }

    #[test]
    fn message_round_trip() {
        let c = code();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let msgs = c.random_messages(&mut rng);
        let file = MessageFile::new(&c, &msgs);
        let back: MessageFile =
            serde_json::from_str(&serde_json::to_string(&file).unwrap()).unwrap();
        assert_eq!(back.to_messages(&c).unwrap(), msgs);
    }

    #[test]
    fn rejects_malformed() {
        let c = code();
        let mut file = WordFile::new(&c, &InterleavedWord::zeros(2, c.n()));
        file.rows[1][4] = vec![3, 0];
        assert!(file.to_word(&c).is_err());
        file.rows[1][4] = vec![0];
        assert!(file.to_word(&c).is_err());
        file.rows[1].pop();
        assert!(file.to_word(&c).is_err());
        let other = CodeParams { q: 3, m_h: 9, h: 2 }.build().unwrap();
        assert!(WordFile::new(&other, &InterleavedWord::zeros(2, 27))
            .to_word(&c)
            .is_err());
        assert!(
            serde_json::from_str::<WordFile>(r#"{"q":3,"mH":8,"h":2,"rows":[],"x":1}"#).is_err()
        );
    }
}
