/// 1-based line of element `index` of the top-level array under `key` in a JSON text, or
/// of the key itself when `index` is `None`.
pub(crate) fn line_of(text: &str, key: &str, index: Option<usize>) -> Option<usize> {
    let needle = format!("\"{key}\"");
    let bytes = text.as_bytes();
    let start = top_level_key(text, &needle)?;
    let line_at = |pos: usize| text[..pos].matches('\n').count() + 1;
    let Some(index) = index else {
        return Some(line_at(start));
    };
    let mut pos = start + needle.len();
    while pos < bytes.len() && bytes[pos] != b'[' {
        pos += 1;
    }
    pos += 1;
    let mut depth = 0usize;
    let mut count = 0usize;
    let mut in_string = false;
    let mut element_start = true;
    while pos < bytes.len() {
        let b = bytes[pos];
        if in_string {
            match b {
                b'\\' => pos += 1,
                b'"' => in_string = false,
                _ => {}
            }
        } else {
            match b {
                b' ' | b'\n' | b'\r' | b'\t' => {}
                b']' | b'}' if depth == 0 => return None,
                b',' if depth == 0 => {
                    count += 1;
                    element_start = true;
                }
                _ => {
                    if element_start && depth == 0 && count == index {
                        return Some(line_at(pos));
                    }
                    element_start = false;
                    match b {
                        b'"' => in_string = true,
                        b'[' | b'{' => depth += 1,
                        b']' | b'}' => depth -= 1,
                        _ => {}
                    }
                }
            }
        }
        pos += 1;
    }
    None
}

/// Byte offset of `needle` as a key of the outermost object.
fn top_level_key(text: &str, needle: &str) -> Option<usize> {
    let bytes = text.as_bytes();
    let mut depth = 0usize;
    let mut in_string = false;
    let mut pos = 0;
    while pos < bytes.len() {
        let b = bytes[pos];
        if in_string {
            match b {
                b'\\' => pos += 1,
                b'"' => in_string = false,
                _ => {}
            }
        } else {
            match b {
                b'"' => {
                    if depth == 1 && text[pos..].starts_with(needle) && text[pos + needle.len()..].trim_start().starts_with(':') {
                        return Some(pos);
                    }
                    in_string = true;
                }
                b'[' | b'{' => depth += 1,
                b']' | b'}' => depth = depth.saturating_sub(1),
                _ => {}
            }
        }
        pos += 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::line_of;

    #[test]
    fn finds_elements_and_keys() {
        let text = "{\n  \"name\": \"x\",\n  \"mult\": [\n    [0, 0, 0, \"1\"],\n    [0, 1, 1, \"[1,0]@4\"]\n  ],\n  \"unit\": [\"1\"]\n}";
        assert_eq!(line_of(text, "mult", Some(0)), Some(4));
        assert_eq!(line_of(text, "mult", Some(1)), Some(5));
        assert_eq!(line_of(text, "mult", Some(2)), None);
        assert_eq!(line_of(text, "unit", None), Some(7));
        assert_eq!(line_of(text, "unit", Some(0)), Some(7));
        assert_eq!(line_of(text, "missing", None), None);
    }
}
