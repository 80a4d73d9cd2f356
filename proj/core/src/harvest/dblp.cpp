#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>

#include "asneval/errors.hpp"
#include "asneval/harvest/clients.hpp"
#include "asneval/util.hpp"

namespace asneval {

namespace {

// --- name handling ----------------------------------------------------------

std::vector<std::string> name_tokens(std::string_view name) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (current.empty()) return;
        bool all_digits = std::all_of(current.begin(), current.end(),
                                      [](char c) { return c >= '0' && c <= '9'; });
        if (!all_digits) tokens.push_back(current);  // drop DBLP homonym numbers
        current.clear();
    };
    for (char c : name) {
        unsigned char u = static_cast<unsigned char>(c);
        if ((u >= 'a' && u <= 'z') || (u >= '0' && u <= '9') || u >= 0x80) {
            current.push_back(c);
        } else if (u >= 'A' && u <= 'Z') {
            current.push_back(static_cast<char>(c - 'A' + 'a'));
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

// --- tiny XML scanner for DBLP person records --------------------------------

std::string decode_entities(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '&') {
            out.push_back(text[i]);
            continue;
        }
        std::size_t semi = text.find(';', i);
        if (semi == std::string_view::npos || semi - i > 10) {
            out.push_back('&');
            continue;
        }
        std::string_view entity = text.substr(i + 1, semi - i - 1);
        if (entity == "amp") {
            out.push_back('&');
        } else if (entity == "lt") {
            out.push_back('<');
        } else if (entity == "gt") {
            out.push_back('>');
        } else if (entity == "quot") {
            out.push_back('"');
        } else if (entity == "apos") {
            out.push_back('\'');
        } else if (!entity.empty() && entity[0] == '#') {
            long code = 0;
            if (entity.size() > 2 && (entity[1] == 'x' || entity[1] == 'X')) {
                code = std::strtol(std::string(entity.substr(2)).c_str(), nullptr, 16);
            } else {
                code = std::strtol(std::string(entity.substr(1)).c_str(), nullptr, 10);
            }
            // encode the code point as UTF-8
            if (code > 0 && code < 0x80) {
                out.push_back(static_cast<char>(code));
            } else if (code >= 0x80 && code < 0x800) {
                out.push_back(static_cast<char>(0xc0 | (code >> 6)));
                out.push_back(static_cast<char>(0x80 | (code & 0x3f)));
            } else if (code >= 0x800 && code <= 0x10ffff) {
                if (code < 0x10000) {
                    out.push_back(static_cast<char>(0xe0 | (code >> 12)));
                } else {
                    out.push_back(static_cast<char>(0xf0 | (code >> 18)));
                    out.push_back(static_cast<char>(0x80 | ((code >> 12) & 0x3f)));
                }
                out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3f)));
                out.push_back(static_cast<char>(0x80 | (code & 0x3f)));
            }
        } else {
            out.append(text.substr(i, semi - i + 1));  // unknown entity: keep verbatim
        }
        i = semi;
    }
    return out;
}

struct XmlTag {
    std::string name;
    std::map<std::string, std::string> attrs;
    bool closing = false;
    bool self_closing = false;
};

// Scans the next tag starting at text[pos] == '<'. Returns false for markup
// we skip (comments, processing instructions, CDATA is not used by DBLP).
bool scan_tag(std::string_view text, std::size_t& pos, XmlTag& tag) {
    if (text.compare(pos, 4, "<!--") == 0) {
        std::size_t end = text.find("-->", pos);
        pos = end == std::string_view::npos ? text.size() : end + 3;
        return false;
    }
    if (text.compare(pos, 2, "<?") == 0 || text.compare(pos, 2, "<!") == 0) {
        std::size_t end = text.find('>', pos);
        pos = end == std::string_view::npos ? text.size() : end + 1;
        return false;
    }

    std::size_t end = text.find('>', pos);
    if (end == std::string_view::npos) {
        pos = text.size();
        return false;
    }
    std::string_view inner = text.substr(pos + 1, end - pos - 1);
    pos = end + 1;

    tag = XmlTag{};
    if (!inner.empty() && inner.front() == '/') {
        tag.closing = true;
        inner.remove_prefix(1);
    }
    if (!inner.empty() && inner.back() == '/') {
        tag.self_closing = true;
        inner.remove_suffix(1);
    }

    std::size_t i = 0;
    while (i < inner.size() && !std::isspace(static_cast<unsigned char>(inner[i]))) ++i;
    tag.name = std::string(inner.substr(0, i));

    // attributes: name="value" or name='value'
    while (i < inner.size()) {
        while (i < inner.size() && std::isspace(static_cast<unsigned char>(inner[i]))) ++i;
        std::size_t name_start = i;
        while (i < inner.size() && inner[i] != '=' &&
               !std::isspace(static_cast<unsigned char>(inner[i]))) {
            ++i;
        }
        std::string attr_name(inner.substr(name_start, i - name_start));
        while (i < inner.size() && std::isspace(static_cast<unsigned char>(inner[i]))) ++i;
        if (i >= inner.size() || inner[i] != '=') continue;
        ++i;
        while (i < inner.size() && std::isspace(static_cast<unsigned char>(inner[i]))) ++i;
        if (i >= inner.size() || (inner[i] != '"' && inner[i] != '\'')) continue;
        char quote = inner[i++];
        std::size_t value_start = i;
        while (i < inner.size() && inner[i] != quote) ++i;
        if (!attr_name.empty()) {
            tag.attrs[attr_name] = decode_entities(inner.substr(value_start, i - value_start));
        }
        if (i < inner.size()) ++i;
    }
    return !tag.name.empty();
}

bool is_record_tag(const std::string& name) {
    static const std::set<std::string> kTags = {
        "article", "inproceedings", "proceedings",  "book", "incollection",
        "phdthesis", "mastersthesis", "www", "data",
    };
    return kTags.contains(name);
}

// Pulls a DOI out of an electronic-edition URL. Only URLs whose host names
// "doi" are considered (doi.org, dx.doi.org, doi.acm.org, ...): version-like
// path segments on other hosts would read as false DOIs.
std::optional<Doi> doi_from_url(std::string_view url) {
    std::string lower = to_lower_ascii(url);
    std::size_t ten = lower.find("/10.");
    std::size_t doi_host = lower.find("doi");
    if (ten == std::string::npos || doi_host == std::string::npos || doi_host > ten) {
        return std::nullopt;
    }
    try {
        return normalize_doi(std::string_view(lower).substr(ten + 1));
    } catch (const MalformedDoi&) {
        return std::nullopt;
    }
}

std::optional<std::string> orcid_from_url(std::string_view url) {
    std::string lower = to_lower_ascii(url);
    if (lower.find("orcid.org/") == std::string::npos) return std::nullopt;
    return normalize_orcid(url);
}

std::string text_of(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_object() && v.contains("text") && v["text"].is_string()) {
        return v["text"].get<std::string>();
    }
    return {};
}

}  // namespace

double name_match_score(std::string_view query, std::string_view candidate) {
    auto q = name_tokens(query);
    auto c = name_tokens(candidate);
    if (q.empty() || c.empty()) return 0.0;
    if (q == c) return 0.9;
    auto qs = q;
    auto cs = c;
    std::sort(qs.begin(), qs.end());
    std::sort(cs.begin(), cs.end());
    if (qs == cs) return 0.7;
    return 0.0;
}

std::string normalize_orcid(std::string_view raw) {
    std::string_view s = trim(raw);
    for (std::string_view prefix :
         {"https://orcid.org/", "http://orcid.org/", "https://www.orcid.org/",
          "http://www.orcid.org/", "orcid.org/"}) {
        if (starts_with_ci(s, prefix)) {
            s.remove_prefix(prefix.size());
            break;
        }
    }
    std::string out(s);
    for (char& c : out) {
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
    return out;
}

DblpPersonRecord parse_dblp_person_xml(std::string_view xml) {
    DblpPersonRecord record;

    bool in_person = false;
    bool in_record = false;
    std::string record_tag;
    std::string record_key;
    std::string record_publtype;
    std::vector<std::string> record_ees;
    std::optional<int> record_year;
    std::optional<std::string> record_journal;
    std::optional<std::string> record_booktitle;
    std::string text;

    auto finalize_record = [&] {
        in_record = false;
        if (record_key.starts_with("homepages/")) return;  // person page, not a publication

        std::optional<Doi> doi;
        for (const std::string& ee : record_ees) {
            doi = doi_from_url(ee);
            if (doi) break;
        }
        if (!doi) {
            ++record.publications.dropped_no_doi;
            return;
        }
        WorkMetadata work;
        work.doi = *doi;
        work.type_label =
            record_publtype.empty() ? record_tag : record_tag + "/" + record_publtype;
        work.year = record_year;
        if (record_journal) {
            work.venue = record_journal;
        } else if (record_booktitle) {
            work.venue = record_booktitle;
        }
        record.publications.works.push_back(std::move(work));
    };

    std::size_t pos = 0;
    while (pos < xml.size()) {
        if (xml[pos] != '<') {
            std::size_t next = xml.find('<', pos);
            if (next == std::string_view::npos) next = xml.size();
            text.append(xml.substr(pos, next - pos));
            pos = next;
            continue;
        }

        XmlTag tag;
        if (!scan_tag(xml, pos, tag)) continue;

        if (!tag.closing) {
            text.clear();
            if (tag.name == "person") {
                in_person = true;
            } else if (!in_record && is_record_tag(tag.name)) {
                in_record = true;
                record_tag = tag.name;
                record_key = tag.attrs.count("key") ? tag.attrs["key"] : "";
                record_publtype = tag.attrs.count("publtype") ? tag.attrs["publtype"] : "";
                record_ees.clear();
                record_year.reset();
                record_journal.reset();
                record_booktitle.reset();
            }
            if (tag.self_closing) {
                if (in_record && tag.name == record_tag) finalize_record();
                if (tag.name == "person") in_person = false;
            }
            continue;
        }

        // closing tag
        std::string content = decode_entities(trim(text));
        text.clear();
        if (in_record) {
            if (tag.name == record_tag) {
                finalize_record();
            } else if (tag.name == "ee") {
                record_ees.push_back(content);
            } else if (tag.name == "year") {
                if (auto year = parse_int(content)) record_year = static_cast<int>(*year);
            } else if (tag.name == "journal") {
                record_journal = content;
            } else if (tag.name == "booktitle") {
                record_booktitle = content;
            }
        } else if (in_person) {
            if (tag.name == "person") {
                in_person = false;
            } else if (tag.name == "url" && !record.orcid) {
                record.orcid = orcid_from_url(content);
            }
        }
    }
    return record;
}

std::vector<PersonMatch> DblpClient::search_person(const std::string& name,
                                                   const std::optional<std::string>& orcid) {
    if (trim(name).empty()) throw Error("person search requires a non-empty name");

    auto result = api_.fetch("/search/author/api?q=" + percent_encode(name) + "&format=json&h=100");
    if (result.status != 200) {
        throw EndpointError(result.status, "author search for '" + name + "' failed");
    }

    nlohmann::json j = nlohmann::json::parse(result.body, nullptr, false);
    if (j.is_discarded()) throw EndpointError(result.status, "unparseable author search response");

    std::vector<PersonMatch> matches;
    const auto hits = j.value("result", nlohmann::json::object())
                          .value("hits", nlohmann::json::object());
    if (hits.contains("hit")) {
        const auto& hit_node = hits["hit"];
        auto each_hit = [&](const nlohmann::json& hit) {
            if (!hit.is_object() || !hit.contains("info")) return;
            const auto& info = hit["info"];
            std::string author = text_of(info.value("author", nlohmann::json()));
            std::string url = text_of(info.value("url", nlohmann::json()));
            std::size_t pid_pos = url.find("/pid/");
            if (author.empty() || pid_pos == std::string::npos) return;

            double score = name_match_score(name, author);
            if (info.contains("aliases")) {
                const auto& alias_node = info["aliases"].value("alias", nlohmann::json());
                auto consider = [&](const nlohmann::json& alias) {
                    std::string alias_name = text_of(alias);
                    if (!alias_name.empty()) {
                        score = std::max(score, name_match_score(name, alias_name));
                    }
                };
                if (alias_node.is_array()) {
                    for (const auto& alias : alias_node) consider(alias);
                } else {
                    consider(alias_node);
                }
            }
            if (score <= 0.0) return;

            PersonMatch match;
            match.source_person_id = url.substr(pid_pos + 5);
            match.display_name = author;
            match.score = score;
            matches.push_back(std::move(match));
        };
        if (hit_node.is_array()) {
            for (const auto& hit : hit_node) each_hit(hit);
        } else {
            each_hit(hit_node);
        }
    }

    auto rank = [](const PersonMatch& a, const PersonMatch& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.source_person_id < b.source_person_id;
    };
    std::sort(matches.begin(), matches.end(), rank);

    if (orcid) {
        std::string target = normalize_orcid(*orcid);
        std::size_t checked = 0;
        for (PersonMatch& match : matches) {
            if (++checked > 5) break;  // person records are an extra fetch each
            try {
                DblpPersonRecord rec = person_record(match.source_person_id);
                if (rec.orcid) {
                    match.orcid = rec.orcid;
                    if (*rec.orcid == target) match.score = 1.0;
                }
            } catch (const UnknownPerson&) {
            } catch (const EndpointError&) {
            }
        }
        std::sort(matches.begin(), matches.end(), rank);
    }
    return matches;
}

DblpPersonRecord DblpClient::person_record(const std::string& person_id) {
    auto result = api_.fetch("/pid/" + encode_path_segments(person_id) + ".xml");
    if (result.status == 404) {
        throw UnknownPerson("DBLP has no person record for pid '" + person_id + "'");
    }
    if (result.status != 200) {
        throw EndpointError(result.status, "person record fetch for pid '" + person_id +
                                               "' failed");
    }
    return parse_dblp_person_xml(result.body);
}

DblpPublicationList DblpClient::publications(const std::string& person_id) {
    return person_record(person_id).publications;
}

}  // namespace asneval
