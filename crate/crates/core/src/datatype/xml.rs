//! Minimal well-formedness check for XML content (the lexical space of
//! `rdf:XMLLiteral`): balanced elements, quoted attributes, character and
//! predefined entity references, comments, CDATA and processing
//! instructions. No DTDs, no namespace processing.

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.s[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn eat(&mut self, prefix: &str) -> bool {
        if self.rest().starts_with(prefix) {
            self.pos += prefix.len();
            true
        } else {
            false
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) -> bool {
        let start = self.pos;
        while matches!(self.peek(), Some(' ' | '\t' | '\n' | '\r')) {
            self.pos += 1;
        }
        self.pos > start
    }

    fn skip_until(&mut self, end: &str) -> bool {
        match self.rest().find(end) {
            Some(i) => {
                self.pos += i + end.len();
                true
            }
            None => false,
        }
    }
}

fn is_name_start(c: char) -> bool {
    c.is_alphabetic() || c == '_' || c == ':'
}

fn is_name_char(c: char) -> bool {
    is_name_start(c) || c.is_numeric() || matches!(c, '-' | '.' | '\u{B7}')
}

fn name<'a>(cur: &mut Cursor<'a>) -> Option<&'a str> {
    let start = cur.pos;
    if !cur.peek().is_some_and(is_name_start) {
        return None;
    }
    while cur.peek().is_some_and(is_name_char) {
        cur.bump();
    }
    Some(&cur.s[start..cur.pos])
}

fn reference(cur: &mut Cursor<'_>) -> bool {
    // The leading '&' has been consumed.
    if cur.eat("#x") {
        let start = cur.pos;
        while cur.peek().is_some_and(|c| c.is_ascii_hexdigit()) {
            cur.bump();
        }
        return cur.pos > start && cur.eat(";");
    }
    if cur.eat("#") {
        let start = cur.pos;
        while cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            cur.bump();
        }
        return cur.pos > start && cur.eat(";");
    }
    matches!(name(cur), Some("amp" | "lt" | "gt" | "quot" | "apos")) && cur.eat(";")
}

fn attribute_value(cur: &mut Cursor<'_>) -> bool {
    let quote = match cur.bump() {
        Some(q @ ('"' | '\'')) => q,
        _ => return false,
    };
    loop {
        match cur.bump() {
            None | Some('<') => return false,
            Some('&') => {
                if !reference(cur) {
                    return false;
                }
            }
            Some(c) if c == quote => return true,
            Some(_) => {}
        }
    }
}

/// Parse content up to a closing tag for `open` (or end of input if `open`
/// is `None`).
fn content(cur: &mut Cursor<'_>, open: Option<&str>, depth: usize) -> bool {
    if depth > 512 {
        return false;
    }
    loop {
        match cur.peek() {
            None => return open.is_none(),
            Some('&') => {
                cur.bump();
                if !reference(cur) {
                    return false;
                }
            }
            Some('<') => {
                if cur.eat("<!--") {
                    if !cur.skip_until("-->") {
                        return false;
                    }
                } else if cur.eat("<![CDATA[") {
                    if !cur.skip_until("]]>") {
                        return false;
                    }
                } else if cur.eat("<?") {
                    if name(cur).is_none() || !cur.skip_until("?>") {
                        return false;
                    }
                } else if cur.eat("</") {
                    let Some(n) = name(cur) else { return false };
                    cur.skip_ws();
                    return cur.eat(">") && Some(n) == open;
                } else {
                    cur.bump();
                    if !element(cur, depth) {
                        return false;
                    }
                }
            }
            Some(_) => {
                if cur.eat("]]>") {
                    return false;
                }
                cur.bump();
            }
        }
    }
}

fn element(cur: &mut Cursor<'_>, depth: usize) -> bool {
    // The leading '<' has been consumed.
    let Some(tag) = name(cur) else { return false };
    let mut seen: Vec<&str> = Vec::new();
    loop {
        let had_ws = cur.skip_ws();
        if cur.eat("/>") {
            return true;
        }
        if cur.eat(">") {
            return content(cur, Some(tag), depth + 1);
        }
        if !had_ws {
            return false;
        }
        let Some(attr) = name(cur) else { return false };
        if seen.contains(&attr) {
            return false;
        }
        seen.push(attr);
        cur.skip_ws();
        if !cur.eat("=") {
            return false;
        }
        cur.skip_ws();
        if !attribute_value(cur) {
            return false;
        }
    }
}

/// Whether `s` is well-formed XML content.
pub fn is_well_formed_content(s: &str) -> bool {
    let mut cur = Cursor { s, pos: 0 };
    content(&mut cur, None, 0)
}
