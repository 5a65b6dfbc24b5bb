use crate::error::{Error, Result};
use crate::linear::{Letter, Word};

/// Byte cursor over a notation string.
pub struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn set_pos(&mut self, pos: usize) {
        self.pos = pos;
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    pub fn skip_ws(&mut self) {
        let r = self.rest();
        self.pos += r.len() - r.trim_start().len();
    }

    pub fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub fn eat(&mut self, tok: &str) -> bool {
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, tok: &str) -> Result<()> {
        self.skip_ws();
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{tok}`")))
        }
    }

    pub fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    /// `e<k>` with k ≥ 1 gives letter k-1; `*` gives `None`.
    pub fn decoration(&mut self) -> Result<Option<Letter>> {
        self.skip_ws();
        if self.eat("*") {
            return Ok(None);
        }
        if !self.eat("e") {
            return Err(self.error("expected a decoration `e<k>` or `*`"));
        }
        let digits: String = self.rest().chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(self.error("expected digits after `e`"));
        }
        self.pos += digits.len();
        let k: usize = digits.parse().map_err(|_| self.error("index too large"))?;
        if k == 0 {
            return Err(self.error("decorations are numbered from e1"));
        }
        Ok(Some(k - 1))
    }

    pub fn at_decoration(&mut self) -> bool {
        self.skip_ws();
        matches!(self.peek(), Some('e') | Some('*'))
    }
}

pub(crate) fn letters_only(decs: &[Option<Letter>], pos: usize) -> Result<Word> {
    decs.iter()
        .map(|d| {
            d.ok_or(Error::Parse {
                pos,
                msg: "bare `*` decoration where a letter is required".into(),
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(Word)
}

pub(crate) fn write_dec(d: Option<Letter>, out: &mut String) {
    match d {
        Some(l) => {
            out.push('e');
            out.push_str(&(l + 1).to_string());
        }
        None => out.push('*'),
    }
}
