#include "goldlab/trace_io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>

#include "goldlab/errors.hpp"
#include "json.hpp"

namespace goldlab {

using ordered_json = nlohmann::ordered_json;
using nlohmann::json;

TraceFiles TraceFiles::at(const std::filesystem::path& path) {
    auto codes = path;
    if (codes.extension() == ".jsonl") codes.replace_extension();
    codes += ".codes.json";
    return {path, codes};
}

void traceDump(const Trace& tr, std::ostream& lines, std::ostream& codes, Budget snapshotBudget) {
    for (std::size_t t = 0; t < tr.size(); ++t) {
        ordered_json rec;
        rec["t"] = t;
        rec["x"] = tr.prefix[t].value;
        rec["label"] = tr.prefix[t].label ? 1 : 0;
        rec["h"] = tr.hyps[t].code();
        lines << rec.dump() << '\n';
    }
    if (tr.divergence) {
        ordered_json rec;
        rec["diverge"] = {{"t", tr.size()}, {"cost", tr.divergence->costSoFar}};
        lines << rec.dump() << '\n';
    }

    std::map<Code, const Hypothesis*> table;
    for (const auto& h : tr.hyps) table.emplace(h.code(), &h);
    ordered_json doc;
    doc["target"] = tr.target ? json::parse(toJson(*tr.target)) : json(nullptr);
    doc["codes"] = json::array();
    for (const auto& [code, h] : table) {
        ordered_json entry;
        entry["code"] = code;
        entry["key"] = h->key();
        if (h->salt()) entry["salt"] = *h->salt();
        if (h->isExact()) {
            entry["exact"] = json::parse(toJson(h->descriptor()));
        } else {
            const auto members = h->enumerator().enumUpTo(snapshotBudget);
            entry["enumerated"] = {{"budget", snapshotBudget},
                                   {"members", members},
                                   {"provenance", provenanceName(h->enumerator().provenance())}};
        }
        doc["codes"].push_back(std::move(entry));
    }
    codes << doc.dump(2) << '\n';
}

void traceDump(const Trace& tr, const TraceFiles& files, Budget snapshotBudget) {
    std::ofstream lines(files.lines, std::ios::binary);
    std::ofstream codes(files.codes, std::ios::binary);
    if (!lines || !codes) throw ConfigError("cannot write trace files at " + files.lines.string());
    traceDump(tr, lines, codes, snapshotBudget);
}

namespace {

std::map<Code, Hypothesis> readCodeTable(std::istream& in, std::optional<LangDescriptor>& target) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(0, std::string("code table: ") + e.what());
    }
    std::map<Code, Hypothesis> out;
    try {
        if (!doc.at("target").is_null()) target = descriptorFromJson(doc.at("target").dump());
        for (const auto& entry : doc.at("codes")) {
            const Code code = entry.at("code").get<Code>();
            std::optional<Natural> salt;
            if (entry.contains("salt")) salt = entry.at("salt").get<Natural>();
            std::optional<LangDescriptor> d;
            std::optional<Enumerator> e;
            if (entry.contains("exact")) {
                d = descriptorFromJson(entry.at("exact").dump());
                e = liftExact(*d);
            } else {
                const auto& en = entry.at("enumerated");
                const auto members = en.at("members").get<std::vector<Natural>>();
                e = snapshotEnumerator(NatSet(members.begin(), members.end()), en.at("budget").get<Budget>());
            }
            out.emplace(code, Hypothesis::restore(code, entry.at("key").get<std::string>(), d, *e, salt));
        }
    } catch (const json::exception& e) {
        throw ParseError(0, std::string("code table: ") + e.what());
    }
    return out;
}

}  // namespace

Trace traceLoad(std::istream& lines, std::istream& codes) {
    Trace tr;
    const auto table = readCodeTable(codes, tr.target);
    std::vector<InfoPair> data;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(lines, line)) {
        ++lineNo;
        if (line.empty()) continue;
        if (tr.divergence) throw ParseError(lineNo, "record after the divergence marker");
        json rec;
        try {
            rec = json::parse(line);
            if (rec.contains("diverge")) {
                const auto& d = rec.at("diverge");
                if (d.at("t").get<std::size_t>() != data.size()) throw ParseError(lineNo, "divergence step out of place");
                tr.divergence = Divergence{d.at("cost").get<Budget>()};
                continue;
            }
            if (rec.at("t").get<std::size_t>() != data.size()) {
                throw ParseError(lineNo, "expected t=" + std::to_string(data.size()));
            }
            const int label = rec.at("label").get<int>();
            if (label != 0 && label != 1) throw ParseError(lineNo, "label must be 0 or 1");
            const Code h = rec.at("h").get<Code>();
            auto it = table.find(h);
            if (it == table.end()) throw ParseError(lineNo, "code " + std::to_string(h) + " missing from the code table");
            data.push_back({rec.at("x").get<Natural>(), label == 1});
            tr.hyps.push_back(it->second);
        } catch (const json::exception& e) {
            throw ParseError(lineNo, e.what());
        }
    }
    try {
        tr.prefix = Prefix(std::move(data));
    } catch (const ContradictionError& e) {
        throw ParseError(lineNo, e.what());
    }
    return tr;
}

Trace traceLoad(const TraceFiles& files) {
    std::ifstream lines(files.lines, std::ios::binary);
    std::ifstream codes(files.codes, std::ios::binary);
    if (!lines) throw ConfigError("cannot open " + files.lines.string());
    if (!codes) throw ConfigError("cannot open " + files.codes.string());
    return traceLoad(lines, codes);
}

}  // namespace goldlab
