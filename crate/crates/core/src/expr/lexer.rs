#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Int,
    Symbol,
    End,
    /// A character no token starts with; the parser reports it.
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    /// Byte offset of the first character.
    pub offset: usize,
}

impl Token {
    pub fn is_symbol(&self, s: &str) -> bool {
        self.kind == TokenKind::Symbol && self.text == s
    }

    pub fn is_ident(&self, s: &str) -> bool {
        self.kind == TokenKind::Ident && self.text == s
    }

    pub fn end(&self) -> usize {
        self.offset + self.text.len()
    }
}

const MODULE_SUM: &str = "(+)";
const SYMBOLS: &[char] = &['/', '*', '(', ')', '[', ']', '^', '+', '-', ','];

/// Splits `input` into tokens. Never fails: unknown characters become
/// [`TokenKind::Error`] tokens and the stream always ends with
/// [`TokenKind::End`].
pub fn tokenize(input: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(offset, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let push = |tokens: &mut Vec<Token>, kind, text: &str| {
            tokens.push(Token {
                kind,
                text: text.to_string(),
                offset,
            })
        };
        if input[offset..].starts_with(MODULE_SUM) {
            push(&mut tokens, TokenKind::Symbol, MODULE_SUM);
            chars.nth(MODULE_SUM.len() - 1);
        } else if c.is_ascii_alphabetic() {
            let end = input[offset..]
                .find(|ch: char| !ch.is_ascii_alphabetic())
                .map_or(input.len(), |n| offset + n);
            push(&mut tokens, TokenKind::Ident, &input[offset..end]);
            while chars.peek().is_some_and(|&(i, _)| i < end) {
                chars.next();
            }
        } else if c.is_ascii_digit() {
            let end = input[offset..]
                .find(|ch: char| !ch.is_ascii_digit())
                .map_or(input.len(), |n| offset + n);
            push(&mut tokens, TokenKind::Int, &input[offset..end]);
            while chars.peek().is_some_and(|&(i, _)| i < end) {
                chars.next();
            }
        } else if SYMBOLS.contains(&c) {
            push(&mut tokens, TokenKind::Symbol, &input[offset..offset + 1]);
            chars.next();
        } else {
            push(&mut tokens, TokenKind::Error, &input[offset..offset + c.len_utf8()]);
            chars.next();
        }
    }
    tokens.push(Token {
        kind: TokenKind::End,
        text: String::new(),
        offset: input.len(),
    });
    tokens
}
