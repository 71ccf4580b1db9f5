#pragma once

// Minimal non-validating, namespace-aware XML reader. Covers the subset used
// by RDF/XML ontology documents and Alignment-format files: elements,
// attributes, character data, CDATA, comments, processing instructions, and
// DOCTYPE internal subsets with <!ENTITY name "value"> declarations.

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "samatch/errors.hpp"

namespace samatch::xml {

struct Attr {
    std::string ns;     // resolved namespace URI; empty for unprefixed attrs
    std::string local;
    std::string value;
};

struct Element {
    std::string ns;
    std::string local;
    std::vector<Attr> attrs;
    std::string text;  // concatenated character data
    std::vector<Element> children;

    const std::string* attr(std::string_view ns_uri, std::string_view name) const {
        for (const auto& a : attrs)
            if (a.local == name && a.ns == ns_uri) return &a.value;
        return nullptr;
    }

    const Element* child(std::string_view ns_uri, std::string_view name) const {
        for (const auto& c : children)
            if (c.local == name && c.ns == ns_uri) return &c;
        return nullptr;
    }

    std::string trimmed_text() const {
        std::size_t b = text.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) return {};
        std::size_t e = text.find_last_not_of(" \t\r\n");
        return text.substr(b, e - b + 1);
    }
};

inline std::string escape(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

namespace detail {

constexpr std::string_view kXmlNs = "http://www.w3.org/XML/1998/namespace";

class Parser {
public:
    explicit Parser(std::string_view input) : in_(input) {}

    Element parse_document() {
        skip_misc();
        if (eof()) fail("document has no root element");
        Element root = parse_element();
        skip_misc();
        if (!eof()) fail("trailing content after root element");
        return root;
    }

private:
    std::string_view in_;
    std::size_t pos_ = 0;
    std::unordered_map<std::string, std::string> entities_;
    // open namespace bindings, innermost last
    std::vector<std::pair<std::string, std::string>> ns_stack_;

    [[noreturn]] void fail(const std::string& what) const {
        throw MalformedInput("xml: " + what + " at offset " + std::to_string(pos_));
    }

    bool eof() const { return pos_ >= in_.size(); }
    char peek() const { return in_[pos_]; }
    bool starts_with(std::string_view s) const { return in_.substr(pos_, s.size()) == s; }

    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n'))
            ++pos_;
    }

    // whitespace, comments, PIs, the XML declaration, and DOCTYPE
    void skip_misc() {
        for (;;) {
            skip_ws();
            if (starts_with("<!--")) {
                skip_comment();
            } else if (starts_with("<?")) {
                skip_until("?>");
            } else if (starts_with("<!DOCTYPE")) {
                parse_doctype();
            } else {
                return;
            }
        }
    }

    void skip_comment() {
        pos_ += 4;
        const auto end = in_.find("-->", pos_);
        if (end == std::string_view::npos) fail("unterminated comment");
        pos_ = end + 3;
    }

    void skip_until(std::string_view terminator) {
        const auto end = in_.find(terminator, pos_);
        if (end == std::string_view::npos) fail("unterminated markup");
        pos_ = end + terminator.size();
    }

    void parse_doctype() {
        pos_ += 9;
        int depth = 0;
        bool in_subset = false;
        while (!eof()) {
            const char c = peek();
            if (c == '[') {
                in_subset = true;
                ++pos_;
                continue;
            }
            if (c == ']') {
                in_subset = false;
                ++pos_;
                continue;
            }
            if (in_subset && starts_with("<!ENTITY")) {
                parse_entity_decl();
                continue;
            }
            if (in_subset && starts_with("<!--")) {
                skip_comment();
                continue;
            }
            if (c == '<') ++depth;
            if (c == '>') {
                if (depth == 0) {
                    ++pos_;
                    return;
                }
                --depth;
            }
            ++pos_;
        }
        fail("unterminated DOCTYPE");
    }

    void parse_entity_decl() {
        pos_ += 8;
        skip_ws();
        std::string name = read_name();
        skip_ws();
        if (eof() || (peek() != '"' && peek() != '\'')) fail("expected entity value");
        const char quote = peek();
        ++pos_;
        const auto end = in_.find(quote, pos_);
        if (end == std::string_view::npos) fail("unterminated entity value");
        entities_[name] = decode_text(in_.substr(pos_, end - pos_));
        pos_ = end + 1;
        skip_ws();
        if (eof() || peek() != '>') fail("unterminated entity declaration");
        ++pos_;
    }

    static bool is_name_char(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
               c == '_' || c == '-' || c == '.' || c == ':' ||
               static_cast<unsigned char>(c) >= 0x80;
    }

    std::string read_name() {
        const std::size_t start = pos_;
        while (!eof() && is_name_char(peek())) ++pos_;
        if (pos_ == start) fail("expected name");
        return std::string(in_.substr(start, pos_ - start));
    }

    std::string decode_text(std::string_view raw) {
        std::string out;
        out.reserve(raw.size());
        for (std::size_t i = 0; i < raw.size();) {
            if (raw[i] != '&') {
                out += raw[i++];
                continue;
            }
            const auto semi = raw.find(';', i);
            if (semi == std::string_view::npos) fail("unterminated entity reference");
            const std::string_view name = raw.substr(i + 1, semi - i - 1);
            if (name == "amp") out += '&';
            else if (name == "lt") out += '<';
            else if (name == "gt") out += '>';
            else if (name == "quot") out += '"';
            else if (name == "apos") out += '\'';
            else if (!name.empty() && name[0] == '#') out += decode_charref(name);
            else {
                auto it = entities_.find(std::string(name));
                if (it == entities_.end())
                    fail("undefined entity '" + std::string(name) + "'");
                out += it->second;
            }
            i = semi + 1;
        }
        return out;
    }

    std::string decode_charref(std::string_view body) const {
        unsigned long cp = 0;
        if (body.size() > 1 && (body[1] == 'x' || body[1] == 'X'))
            cp = std::stoul(std::string(body.substr(2)), nullptr, 16);
        else
            cp = std::stoul(std::string(body.substr(1)), nullptr, 10);
        // UTF-8 encode
        std::string out;
        if (cp < 0x80) {
            out += static_cast<char>(cp);
        } else if (cp < 0x800) {
            out += static_cast<char>(0xC0 | (cp >> 6));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
            out += static_cast<char>(0xE0 | (cp >> 12));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else {
            out += static_cast<char>(0xF0 | (cp >> 18));
            out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        }
        return out;
    }

    std::string resolve_prefix(const std::string& prefix, bool for_attr) const {
        if (prefix == "xml") return std::string(kXmlNs);
        if (prefix.empty() && for_attr) return {};  // unprefixed attrs have no namespace
        for (auto it = ns_stack_.rbegin(); it != ns_stack_.rend(); ++it)
            if (it->first == prefix) return it->second;
        if (prefix.empty()) return {};
        // RDF tooling in the wild occasionally leaves prefixes undeclared;
        // surface them verbatim rather than guessing.
        return prefix + ":";
    }

    Element parse_element() {
        if (eof() || peek() != '<') fail("expected element");
        ++pos_;
        const std::string qname = read_name();
        const std::size_t ns_mark = ns_stack_.size();

        std::vector<std::pair<std::string, std::string>> raw_attrs;
        for (;;) {
            skip_ws();
            if (eof()) fail("unterminated start tag");
            if (peek() == '>' || starts_with("/>")) break;
            std::string aname = read_name();
            skip_ws();
            if (eof() || peek() != '=') fail("expected '=' in attribute");
            ++pos_;
            skip_ws();
            if (eof() || (peek() != '"' && peek() != '\'')) fail("expected attribute value");
            const char quote = peek();
            ++pos_;
            const auto end = in_.find(quote, pos_);
            if (end == std::string_view::npos) fail("unterminated attribute value");
            std::string value = decode_text(in_.substr(pos_, end - pos_));
            pos_ = end + 1;

            if (aname == "xmlns") {
                ns_stack_.emplace_back("", std::move(value));
            } else if (aname.rfind("xmlns:", 0) == 0) {
                ns_stack_.emplace_back(aname.substr(6), std::move(value));
            } else {
                raw_attrs.emplace_back(std::move(aname), std::move(value));
            }
        }

        Element elem;
        split_qname(qname, elem, /*for_attr=*/false);
        for (auto& [aname, value] : raw_attrs) {
            Attr a;
            const auto colon = aname.find(':');
            if (colon == std::string::npos) {
                a.local = aname;
            } else {
                a.ns = resolve_prefix(aname.substr(0, colon), /*for_attr=*/true);
                a.local = aname.substr(colon + 1);
            }
            a.value = std::move(value);
            elem.attrs.push_back(std::move(a));
        }

        if (starts_with("/>")) {
            pos_ += 2;
            ns_stack_.resize(ns_mark);
            return elem;
        }
        ++pos_;  // '>'

        // content
        for (;;) {
            if (eof()) fail("unterminated element <" + qname + ">");
            if (starts_with("</")) {
                pos_ += 2;
                const std::string close = read_name();
                if (close != qname)
                    fail("mismatched end tag </" + close + "> for <" + qname + ">");
                skip_ws();
                if (eof() || peek() != '>') fail("malformed end tag");
                ++pos_;
                ns_stack_.resize(ns_mark);
                return elem;
            }
            if (starts_with("<!--")) {
                skip_comment();
            } else if (starts_with("<![CDATA[")) {
                pos_ += 9;
                const auto end = in_.find("]]>", pos_);
                if (end == std::string_view::npos) fail("unterminated CDATA");
                elem.text.append(in_.substr(pos_, end - pos_));
                pos_ = end + 3;
            } else if (starts_with("<?")) {
                skip_until("?>");
            } else if (peek() == '<') {
                elem.children.push_back(parse_element());
            } else {
                const auto next = in_.find('<', pos_);
                const auto stop = next == std::string_view::npos ? in_.size() : next;
                elem.text += decode_text(in_.substr(pos_, stop - pos_));
                pos_ = stop;
            }
        }
    }

    void split_qname(const std::string& qname, Element& elem, bool for_attr) {
        const auto colon = qname.find(':');
        if (colon == std::string::npos) {
            elem.ns = resolve_prefix("", for_attr);
            elem.local = qname;
        } else {
            elem.ns = resolve_prefix(qname.substr(0, colon), for_attr);
            elem.local = qname.substr(colon + 1);
        }
    }
};

}  // namespace detail

// Parses a complete document and returns its root element.
inline Element parse(std::string_view document) {
    return detail::Parser(document).parse_document();
}

}  // namespace samatch::xml
