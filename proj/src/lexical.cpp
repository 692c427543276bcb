#include "archslicer/lexical.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace archslicer {

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_identifier(const std::string& text) {
    if (text.empty() || !is_ident_start(text[0])) {
        return false;
    }
    return std::all_of(text.begin(), text.end(), is_ident_char);
}

bool starts_upper(const std::string& text) {
    return !text.empty() && std::isupper(static_cast<unsigned char>(text[0]));
}

const std::array<const char*, 53> kJavaKeywords = {
    "abstract", "assert",   "boolean",   "break",      "byte",    "case",     "catch",
    "char",     "class",    "const",     "continue",   "default", "do",       "double",
    "else",     "enum",     "extends",   "final",      "finally", "float",    "for",
    "goto",     "if",       "implements", "import",    "instanceof", "int",   "interface",
    "long",     "native",   "new",       "package",    "private", "protected", "public",
    "return",   "short",    "static",    "strictfp",   "super",   "switch",   "synchronized",
    "this",     "throw",    "throws",    "transient",  "try",     "void",     "volatile",
    "while",    "true",     "false",     "null"};

const std::array<const char*, 14> kJavaModifiers = {
    "public", "protected", "private", "static", "final", "abstract", "synchronized",
    "native", "strictfp",  "default", "sealed", "non",   "transient", "volatile"};

const std::array<const char*, 18> kKotlinModifiers = {
    "public",  "private",  "internal", "protected", "open",   "override", "final",
    "suspend", "inline",   "operator", "infix",     "tailrec", "external", "expect",
    "actual",  "abstract", "sealed",   "data"};

const std::array<const char*, 14> kStatementKeywords = {
    "if", "else", "for", "while", "do", "switch", "case", "try", "catch",
    "finally", "return", "throw", "new", "assert"};

bool contains_token(const std::string& line, const std::string& token) {
    size_t pos = 0;
    while ((pos = line.find(token, pos)) != std::string::npos) {
        bool left_ok = pos == 0 || !is_ident_char(line[pos - 1]);
        size_t end = pos + token.size();
        bool right_ok = end >= line.size() || !is_ident_char(line[end]);
        if (left_ok && right_ok) {
            return true;
        }
        pos = end;
    }
    return false;
}

template <size_t N>
bool is_in(const std::string& word, const std::array<const char*, N>& set) {
    return std::any_of(set.begin(), set.end(), [&](const char* w) { return word == w; });
}

std::vector<std::string> ident_tokens(const std::string& text) {
    std::vector<std::string> tokens;
    size_t i = 0;
    while (i < text.size()) {
        if (is_ident_start(text[i])) {
            size_t j = i + 1;
            while (j < text.size() && is_ident_char(text[j])) {
                ++j;
            }
            tokens.push_back(text.substr(i, j - i));
            i = j;
        } else {
            ++i;
        }
    }
    return tokens;
}

// Blanks the contents of string/char literals, carrying multi-line literal
// state across lines so brace counting and keyword scans stay honest inside
// text blocks and Kotlin raw strings.
struct LiteralScanner {
    bool in_triple = false;

    std::string blank(const std::string& line) {
        std::string out = line;
        size_t i = 0;
        while (i < out.size()) {
            if (in_triple) {
                if (out.compare(i, 3, "\"\"\"") == 0) {
                    in_triple = false;
                    i += 3;
                } else {
                    out[i] = ' ';
                    ++i;
                }
                continue;
            }
            char c = out[i];
            if (c == '"') {
                if (out.compare(i, 3, "\"\"\"") == 0) {
                    in_triple = true;
                    i += 3;
                    continue;
                }
                size_t j = i + 1;
                while (j < out.size() && out[j] != '"') {
                    if (out[j] == '\\' && j + 1 < out.size()) {
                        out[j] = ' ';
                        ++j;
                    }
                    out[j] = ' ';
                    ++j;
                }
                i = j < out.size() ? j + 1 : j;  // unterminated: string ends at EOL
            } else if (c == '\'') {
                size_t j = i + 1;
                while (j < out.size() && out[j] != '\'') {
                    if (out[j] == '\\' && j + 1 < out.size()) {
                        out[j] = ' ';
                        ++j;
                    }
                    out[j] = ' ';
                    ++j;
                }
                i = j < out.size() ? j + 1 : j;
            } else {
                ++i;
            }
        }
        return out;
    }
};

int brace_delta(const std::string& blanked) {
    int delta = 0;
    for (char c : blanked) {
        if (c == '{') {
            ++delta;
        } else if (c == '}') {
            --delta;
        }
    }
    return delta;
}

// Blanks leading annotations (incl. their argument lists) in place so that
// "@Override public void f()" matches like a plain signature and the first
// surviving '(' is the parameter list.
std::string blank_annotations(const std::string& line) {
    std::string out = line;
    size_t i = 0;
    while (i < out.size()) {
        while (i < out.size() && std::isspace(static_cast<unsigned char>(out[i]))) {
            ++i;
        }
        if (i >= out.size() || out[i] != '@') {
            break;
        }
        out[i++] = ' ';
        while (i < out.size() && (is_ident_char(out[i]) || out[i] == '.')) {
            out[i++] = ' ';
        }
        size_t j = i;
        while (j < out.size() && std::isspace(static_cast<unsigned char>(out[j]))) {
            ++j;
        }
        if (j < out.size() && out[j] == '(') {
            int parens = 0;
            while (j < out.size()) {
                if (out[j] == '(') {
                    ++parens;
                } else if (out[j] == ')') {
                    --parens;
                    if (parens == 0) {
                        out[j] = ' ';
                        ++j;
                        break;
                    }
                }
                out[j] = ' ';
                ++j;
            }
            i = j;
        }
    }
    return out;
}

}  // namespace

std::string ImportRecord::package_path() const {
    if (segments.size() <= 1) {
        return {};
    }
    std::vector<std::string> head(segments.begin(), segments.end() - 1);
    return join(head, ".");
}

std::string strip_comments(const std::string& source, Diagnostics* diags) {
    std::string out = source;
    enum class State { code, line_comment, block_comment, string, triple_string, char_lit };
    State state = State::code;

    size_t i = 0;
    while (i < out.size()) {
        char c = out[i];
        switch (state) {
            case State::code:
                if (c == '/' && i + 1 < out.size() && out[i + 1] == '/') {
                    out[i] = ' ';
                    out[i + 1] = ' ';
                    i += 2;
                    state = State::line_comment;
                } else if (c == '/' && i + 1 < out.size() && out[i + 1] == '*') {
                    out[i] = ' ';
                    out[i + 1] = ' ';
                    i += 2;
                    state = State::block_comment;
                } else if (c == '"') {
                    if (out.compare(i, 3, "\"\"\"") == 0) {
                        state = State::triple_string;
                        i += 3;
                    } else {
                        state = State::string;
                        ++i;
                    }
                } else if (c == '\'') {
                    state = State::char_lit;
                    ++i;
                } else {
                    ++i;
                }
                break;
            case State::line_comment:
                if (c == '\n') {
                    state = State::code;
                } else {
                    out[i] = ' ';
                }
                ++i;
                break;
            case State::block_comment:
                if (c == '*' && i + 1 < out.size() && out[i + 1] == '/') {
                    out[i] = ' ';
                    out[i + 1] = ' ';
                    i += 2;
                    state = State::code;
                } else {
                    if (c != '\n') {
                        out[i] = ' ';
                    }
                    ++i;
                }
                break;
            case State::string:
                if (c == '\\' && i + 1 < out.size()) {
                    i += 2;
                } else if (c == '"' || c == '\n') {
                    state = State::code;
                    ++i;
                } else {
                    ++i;
                }
                break;
            case State::triple_string:
                if (out.compare(i, 3, "\"\"\"") == 0) {
                    state = State::code;
                    i += 3;
                } else {
                    ++i;
                }
                break;
            case State::char_lit:
                if (c == '\\' && i + 1 < out.size()) {
                    i += 2;
                } else if (c == '\'' || c == '\n') {
                    state = State::code;
                    ++i;
                } else {
                    ++i;
                }
                break;
        }
    }
    if (state == State::block_comment) {
        diag(diags, "unterminated block comment stripped to end of file");
    }
    return out;
}

std::vector<ImportRecord> extract_imports(const std::string& source, Language language,
                                          const std::string& file, Diagnostics* diags) {
    std::vector<ImportRecord> records;
    auto lines = split_lines(source);

    for (size_t i = 0; i < lines.size(); ++i) {
        std::string trimmed = trim(lines[i]);
        if (trimmed.compare(0, 6, "import") != 0 ||
            (trimmed.size() > 6 && is_ident_char(trimmed[6]))) {
            continue;
        }

        int line_no = static_cast<int>(i) + 1;
        std::string statement = trimmed;
        if (language == Language::java) {
            size_t extra = i;
            while (statement.find(';') == std::string::npos && extra + 1 < lines.size() &&
                   extra - i < 4) {
                ++extra;
                statement += " " + trim(lines[extra]);
            }
            i = extra;
            auto semi = statement.find(';');
            if (semi != std::string::npos) {
                statement = statement.substr(0, semi);
            }
        } else {
            auto semi = statement.find(';');
            if (semi != std::string::npos) {
                statement = statement.substr(0, semi);
            }
            auto alias = statement.find(" as ");
            if (alias != std::string::npos) {
                statement = statement.substr(0, alias);
            }
        }

        std::string body = trim(statement.substr(6));
        bool is_static = false;
        if (language == Language::java && body.compare(0, 7, "static ") == 0) {
            is_static = true;
            body = trim(body.substr(7));
        }

        auto segments = split(body, '.');
        for (auto& seg : segments) {
            seg = trim(seg);
        }
        bool ok = !segments.empty();
        for (size_t s = 0; ok && s < segments.size(); ++s) {
            bool terminal = s + 1 == segments.size();
            if (!(is_identifier(segments[s]) || (terminal && segments[s] == "*"))) {
                ok = false;
            }
        }
        if (!ok) {
            diag(diags, "malformed import skipped at " +
                            (file.empty() ? std::string("line ") : file + ":") +
                            std::to_string(line_no) + ": " + trimmed);
            continue;
        }

        ImportRecord record;
        record.raw = trimmed;
        record.segments = std::move(segments);
        record.file = file;
        record.line = line_no;

        const auto& segs = record.segments;
        if (segs.back() == "*") {
            record.kind = ImportKind::wildcard;
        } else if (is_static) {
            record.kind = ImportKind::static_member;
        } else if (segs.size() >= 2 && starts_upper(segs[segs.size() - 2])) {
            // Kotlin has no `static` keyword (SL5): a lowercase terminal after a
            // capitalized segment reads as a member, a capitalized one as an
            // inner class. The same convention covers Java inner-class imports.
            record.kind = starts_upper(segs.back()) ? ImportKind::inner_class
                                                    : ImportKind::static_member;
        } else {
            record.kind = ImportKind::plain;
        }
        records.push_back(std::move(record));
    }
    return records;
}

std::optional<ModuleDescriptor> parse_module_descriptor(const std::string& source,
                                                        Diagnostics* diags) {
    // Token stream over identifiers/dotted names plus the punctuation that
    // matters for the JPMS grammar.
    std::vector<std::string> tokens;
    size_t i = 0;
    while (i < source.size()) {
        char c = source[i];
        if (is_ident_start(c)) {
            size_t j = i + 1;
            while (j < source.size() && (is_ident_char(source[j]) || source[j] == '.')) {
                ++j;
            }
            std::string tok = source.substr(i, j - i);
            while (!tok.empty() && tok.back() == '.') {
                tok.pop_back();
                --j;
            }
            tokens.push_back(tok);
            i = j;
        } else if (c == '{' || c == '}' || c == ';' || c == ',' || c == '@') {
            tokens.emplace_back(1, c);
            ++i;
        } else {
            ++i;
        }
    }

    size_t t = 0;
    auto skip_statement = [&] {
        while (t < tokens.size() && tokens[t] != ";") {
            ++t;
        }
        if (t < tokens.size()) {
            ++t;
        }
    };

    ModuleDescriptor descriptor;
    bool found_module = false;
    while (t < tokens.size()) {
        if (tokens[t] == "@") {
            t += 2;  // annotation name
            continue;
        }
        if (tokens[t] == "import") {
            skip_statement();
            continue;
        }
        if (tokens[t] == "open" && t + 1 < tokens.size() && tokens[t + 1] == "module") {
            descriptor.is_open = true;
            ++t;
            continue;
        }
        if (tokens[t] == "module" && t + 1 < tokens.size()) {
            descriptor.module_name = tokens[t + 1];
            found_module = true;
            t += 2;
            break;
        }
        ++t;
    }
    if (!found_module || descriptor.module_name.empty()) {
        diag(diags, "no module declaration found; not a module descriptor");
        return std::nullopt;
    }
    if (t < tokens.size() && tokens[t] == "{") {
        ++t;
    }

    while (t < tokens.size() && tokens[t] != "}") {
        const std::string& word = tokens[t];
        if (word == ";") {
            ++t;
            continue;
        }
        Directive directive;
        if (word == "requires") {
            ++t;
            directive.op = DirectiveOp::Requires;
            while (t < tokens.size() && (tokens[t] == "transitive" || tokens[t] == "static") &&
                   t + 1 < tokens.size() && tokens[t + 1] != ";") {
                if (tokens[t] == "transitive") {
                    directive.op = DirectiveOp::RequiresTransitive;
                }
                ++t;
            }
            if (t >= tokens.size() || tokens[t] == ";" || tokens[t] == "}") {
                diag(diags, "requires directive without a target");
                skip_statement();
                continue;
            }
            directive.target = tokens[t];
            skip_statement();
        } else if (word == "exports" || word == "opens") {
            directive.op = word == "exports" ? DirectiveOp::Exports : DirectiveOp::Opens;
            ++t;
            if (t >= tokens.size() || tokens[t] == ";") {
                diag(diags, word + " directive without a target");
                skip_statement();
                continue;
            }
            directive.target = tokens[t];
            ++t;
            if (t < tokens.size() && tokens[t] == "to") {
                ++t;
                while (t < tokens.size() && tokens[t] != ";") {
                    if (tokens[t] != ",") {
                        directive.qualifier.push_back(tokens[t]);
                    }
                    ++t;
                }
            }
            skip_statement();
        } else if (word == "provides") {
            directive.op = DirectiveOp::Provides;
            ++t;
            if (t >= tokens.size() || tokens[t] == ";") {
                diag(diags, "provides directive without a target");
                skip_statement();
                continue;
            }
            directive.target = tokens[t];
            ++t;
            if (t < tokens.size() && tokens[t] == "with") {
                ++t;
                while (t < tokens.size() && tokens[t] != ";") {
                    if (tokens[t] != ",") {
                        directive.qualifier.push_back(tokens[t]);
                    }
                    ++t;
                }
            }
            if (directive.qualifier.empty()) {
                diag(diags, "provides directive without implementation list skipped");
                skip_statement();
                continue;
            }
            skip_statement();
        } else if (word == "uses") {
            directive.op = DirectiveOp::Uses;
            ++t;
            if (t >= tokens.size() || tokens[t] == ";") {
                diag(diags, "uses directive without a target");
                skip_statement();
                continue;
            }
            directive.target = tokens[t];
            skip_statement();
        } else {
            diag(diags, "unrecognized directive token '" + word + "' skipped");
            skip_statement();
            continue;
        }
        descriptor.directives.push_back(std::move(directive));
    }
    return descriptor;
}

std::optional<std::string> extract_package(const std::string& source, Diagnostics* diags) {
    std::optional<std::string> package;
    auto lines = split_lines(source);
    for (size_t i = 0; i < lines.size(); ++i) {
        std::string trimmed = trim(lines[i]);
        if (trimmed.compare(0, 7, "package") != 0 ||
            (trimmed.size() > 7 && is_ident_char(trimmed[7]))) {
            continue;
        }
        std::string body = trim(trimmed.substr(7));
        size_t end = 0;
        while (end < body.size() && (is_ident_char(body[end]) || body[end] == '.')) {
            ++end;
        }
        std::string name = body.substr(0, end);
        if (name.empty()) {
            continue;
        }
        if (package) {
            diag(diags, "multiple package declarations; keeping the first (line " +
                            std::to_string(i + 1) + " ignored)");
            continue;
        }
        package = name;
    }
    return package;
}

namespace {

// Result of probing one line for a method signature.
struct SignatureMatch {
    std::string name;
    size_t after_prefix = 0;  // offset of the '(' in the line
};

std::optional<SignatureMatch> match_java_signature(const std::string& blanked, int depth) {
    if (depth < 1) {
        return std::nullopt;
    }
    std::string line = trim(blanked);
    if (line.empty() || line[0] == '@' || line[0] == '}' || line[0] == '{') {
        return std::nullopt;
    }
    auto paren = blanked.find('(');
    if (paren == std::string::npos) {
        return std::nullopt;
    }
    std::string prefix = blanked.substr(0, paren);
    if (prefix.find('=') != std::string::npos || prefix.find('@') != std::string::npos) {
        return std::nullopt;
    }
    auto tokens = ident_tokens(prefix);
    if (tokens.size() < 2) {
        return std::nullopt;
    }
    if (is_in(tokens.front(), kStatementKeywords)) {
        return std::nullopt;
    }
    for (const auto& tok : tokens) {
        if (tok == "class" || tok == "interface" || tok == "enum" || tok == "record") {
            return std::nullopt;
        }
    }
    const std::string& name = tokens.back();
    if (!is_identifier(name) || is_in(name, kJavaKeywords)) {
        return std::nullopt;
    }
    // Reject call chains: the identifier before '(' must not follow a dot.
    size_t name_pos = prefix.rfind(name);
    size_t before = name_pos;
    while (before > 0 && std::isspace(static_cast<unsigned char>(prefix[before - 1]))) {
        --before;
    }
    if (before > 0 && prefix[before - 1] == '.') {
        return std::nullopt;
    }
    // The token before the name must be a type or modifier, not arbitrary code.
    const std::string& prev = tokens[tokens.size() - 2];
    if (is_in(prev, kStatementKeywords)) {
        return std::nullopt;
    }
    return SignatureMatch{name, paren};
}

std::optional<SignatureMatch> match_kotlin_signature(const std::string& blanked, int) {
    auto tokens = ident_tokens(blanked.substr(0, blanked.find('(')));
    if (tokens.empty()) {
        return std::nullopt;
    }
    size_t k = 0;
    while (k < tokens.size() && is_in(tokens[k], kKotlinModifiers)) {
        ++k;
    }
    if (k >= tokens.size() || tokens[k] != "fun") {
        return std::nullopt;
    }
    auto paren = blanked.find('(');
    if (paren == std::string::npos) {
        return std::nullopt;
    }
    if (k + 1 >= tokens.size()) {
        return std::nullopt;
    }
    // Receiver types ("fun String.render") keep the terminal identifier.
    return SignatureMatch{tokens.back(), paren};
}

}  // namespace

std::vector<MethodSpan> extract_methods(const std::string& source, Language language,
                                        Diagnostics* diags) {
    auto lines = split_lines(source);
    std::vector<std::string> blanked;
    blanked.reserve(lines.size());
    LiteralScanner scanner;
    for (const auto& line : lines) {
        blanked.push_back(scanner.blank(line));
    }

    // Finds the line index holding the brace that closes an opener at
    // (line, col). Returns the last line when braces never rebalance.
    auto close_of = [&](size_t line_idx, size_t col) {
        int depth = 0;
        for (size_t li = line_idx; li < blanked.size(); ++li) {
            for (size_t ci = li == line_idx ? col : 0; ci < blanked[li].size(); ++ci) {
                char c = blanked[li][ci];
                if (c == '{') {
                    ++depth;
                } else if (c == '}') {
                    --depth;
                    if (depth == 0) {
                        return std::pair<size_t, bool>{li, true};
                    }
                }
            }
        }
        return std::pair<size_t, bool>{blanked.empty() ? 0 : blanked.size() - 1, false};
    };

    std::vector<MethodSpan> spans;
    int depth = 0;
    size_t i = 0;
    while (i < lines.size()) {
        const std::string& blank_line = blanked[i];

        auto match = language == Language::java ? match_java_signature(blank_line, depth)
                                                : match_kotlin_signature(blank_line, depth);
        if (match) {
            // Scan past the parameter list for the body opener; a ';' (Java)
            // or a bare declaration (Kotlin) means there is no span to record.
            size_t li = i;
            size_t ci = match->after_prefix;
            int parens = 0;
            bool params_done = false;
            std::optional<std::pair<size_t, size_t>> opener;  // (line, col) of '{'
            std::optional<size_t> expr_line;
            bool abstract_decl = false;
            size_t scan_limit = std::min(lines.size(), i + 30);
            for (; li < scan_limit && !opener && !expr_line && !abstract_decl; ++li) {
                for (size_t cj = li == i ? ci : 0; cj < blanked[li].size(); ++cj) {
                    char c = blanked[li][cj];
                    if (c == '(') {
                        ++parens;
                    } else if (c == ')') {
                        --parens;
                        if (parens == 0) {
                            params_done = true;
                        }
                    } else if (params_done && c == '{') {
                        opener = {li, cj};
                        break;
                    } else if (params_done && c == ';') {
                        abstract_decl = true;
                        break;
                    } else if (params_done && c == '=' && language == Language::kotlin) {
                        auto rest = blanked[li].find('{', cj);
                        if (rest != std::string::npos) {
                            opener = {li, rest};
                        } else {
                            expr_line = li;
                        }
                        break;
                    } else if (params_done && c == '=' && language == Language::java) {
                        abstract_decl = true;  // actually a field/lambda assignment
                        break;
                    }
                }
            }

            if (opener) {
                auto [end_line, balanced] = close_of(opener->first, opener->second);
                if (!balanced) {
                    diag(diags, "unbalanced braces; method span extended to end of file: " +
                                    match->name);
                }
                MethodSpan span;
                span.name = match->name;
                span.start_line = static_cast<int>(i) + 1;
                span.end_line = static_cast<int>(end_line) + 1;
                span.signature_text = trim(lines[i]);
                spans.push_back(std::move(span));
                for (size_t d = i; d <= end_line && d < blanked.size(); ++d) {
                    // account for the skipped body's net depth
                    depth += brace_delta(blanked[d]);
                }
                i = end_line + 1;
                continue;
            }
            if (expr_line) {
                MethodSpan span;
                span.name = match->name;
                span.start_line = static_cast<int>(i) + 1;
                span.end_line = static_cast<int>(*expr_line) + 1;
                span.signature_text = trim(lines[i]);
                spans.push_back(std::move(span));
                depth += brace_delta(blank_line);
                i = *expr_line + 1;
                continue;
            }
            // fall through: declaration without body
        }

        // Anonymous class bodies outside methods (field initializers) are
        // skipped wholesale; the tool does not descend into them.
        if (contains_token(blank_line, "new")) {
            auto new_pos = blank_line.find("new");
            auto brace = blank_line.find('{', new_pos);
            if (brace != std::string::npos && !match) {
                auto [end_line, balanced] = close_of(i, brace);
                (void)balanced;
                for (size_t d = i; d <= end_line && d < blanked.size(); ++d) {
                    depth += brace_delta(blanked[d]);
                }
                i = end_line + 1;
                continue;
            }
        }

        depth += brace_delta(blank_line);
        i += 1;
    }
    return spans;
}

std::vector<std::string> extract_kotlin_type_names(const std::string& source) {
    std::vector<std::string> names;
    auto lines = split_lines(source);
    LiteralScanner scanner;
    int depth = 0;
    for (const auto& raw : lines) {
        std::string blank_line = scanner.blank(raw);
        if (depth == 0) {
            auto tokens = ident_tokens(blank_line);
            size_t k = 0;
            while (k < tokens.size() &&
                   (is_in(tokens[k], kKotlinModifiers) || tokens[k] == "enum" ||
                    tokens[k] == "annotation" || tokens[k] == "value" || tokens[k] == "inner")) {
                ++k;
            }
            if (k + 1 < tokens.size() + 1 && k < tokens.size() &&
                (tokens[k] == "class" || tokens[k] == "interface" || tokens[k] == "object") &&
                k + 1 < tokens.size() && is_identifier(tokens[k + 1])) {
                names.push_back(tokens[k + 1]);
            }
        }
        depth += brace_delta(blank_line);
    }
    return names;
}

bool is_signature_line(const std::string& line, Language language) {
    LiteralScanner scanner;
    std::string blank_line = scanner.blank(line);
    auto tokens = ident_tokens(blank_line);
    if (tokens.empty()) {
        return false;
    }

    size_t k = 0;
    while (k < tokens.size() &&
           (is_in(tokens[k], kJavaModifiers) || is_in(tokens[k], kKotlinModifiers))) {
        ++k;
    }
    if (k < tokens.size()) {
        const std::string& head = tokens[k];
        if ((head == "class" || head == "interface" || head == "enum" || head == "record" ||
             head == "object" || head == "fun") &&
            k + 1 < tokens.size()) {
            return true;
        }
    }
    if (language == Language::kotlin) {
        return match_kotlin_signature(blank_line, 1).has_value();
    }
    return match_java_signature(blank_line, 1).has_value();
}

bool touches_structure(const std::string& line, Language language) {
    std::string trimmed = trim(line);
    if (trimmed.compare(0, 6, "import") == 0 &&
        (trimmed.size() == 6 || !is_ident_char(trimmed[6]))) {
        return true;
    }
    if (trimmed.compare(0, 7, "package") == 0 &&
        (trimmed.size() == 7 || !is_ident_char(trimmed[7]))) {
        return true;
    }
    return is_signature_line(line, language);
}

const char* to_string(DirectiveOp op) {
    switch (op) {
        case DirectiveOp::Requires: return "requires";
        case DirectiveOp::RequiresTransitive: return "requires_transitive";
        case DirectiveOp::Exports: return "exports";
        case DirectiveOp::Opens: return "opens";
        case DirectiveOp::Provides: return "provides";
        case DirectiveOp::Uses: return "uses";
    }
    return "?";
}

const char* to_string(ImportKind kind) {
    switch (kind) {
        case ImportKind::plain: return "plain";
        case ImportKind::wildcard: return "wildcard";
        case ImportKind::static_member: return "static_member";
        case ImportKind::inner_class: return "inner_class";
    }
    return "?";
}

}  // namespace archslicer
