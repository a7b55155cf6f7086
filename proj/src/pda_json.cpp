#include "mcnet/pda_json.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "mcnet/combinatorics.hpp"

namespace mcnet {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json array_to_json(const ArrayDocument& doc) {
    const PdaArray& a = doc.array;
    ordered_json j;
    j["F"] = a.rows();
    j["K"] = a.cols();
    ordered_json entries = ordered_json::array();
    for (int row = 0; row < a.rows(); ++row) {
        ordered_json line = ordered_json::array();
        for (int col = 0; col < a.cols(); ++col) {
            PdaEntry e = a.at(row, col);
            if (e.is_star())
                line.push_back(nullptr);
            else
                line.push_back(e.symbol_id());
        }
        entries.push_back(std::move(line));
    }
    j["entries"] = std::move(entries);
    if (a.has_col_labels()) {
        ordered_json labels = ordered_json::array();
        for (const ColumnLabel& c : a.col_labels) {
            ordered_json item;
            item["T"] = c.relay_set;
            item["i"] = c.user_index;
            labels.push_back(std::move(item));
        }
        j["col_labels"] = std::move(labels);
    }
    if (!a.row_labels.empty()) j["row_labels"] = a.row_labels;
    if (!doc.symbol_labels.empty()) {
        ordered_json table = ordered_json::array();
        for (std::size_t s = 0; s < doc.symbol_labels.size(); ++s) {
            const SymbolLabel& lab = doc.symbol_labels[s];
            ordered_json item;
            item["s"] = s + 1;
            item["e"] = bits_to_string(lab.signature);
            item["C"] = lab.common_relays;
            table.push_back(std::move(item));
        }
        j["int_labels"] = std::move(table);
    }
    return j;
}

ArrayDocument array_from_json(const json& j) {
    try {
        ArrayDocument doc;
        const int F = j.at("F").get<int>();
        const int K = j.at("K").get<int>();
        if (F < 1 || K < 1) throw StructuralError("F and K must be positive");
        const json& entries = j.at("entries");
        if (static_cast<int>(entries.size()) != F)
            throw StructuralError("entry grid has wrong row count");
        doc.array = PdaArray(F, K);
        for (int row = 0; row < F; ++row) {
            const json& line = entries.at(row);
            if (static_cast<int>(line.size()) != K)
                throw StructuralError("ragged entry grid");
            for (int col = 0; col < K; ++col) {
                const json& cell = line.at(col);
                if (cell.is_null()) continue;
                const auto v = cell.get<std::int64_t>();
                if (v < 1) throw StructuralError("symbols must be positive integers");
                doc.array.set(row, col, PdaEntry::symbol(static_cast<std::int32_t>(v)));
            }
        }
        if (j.contains("col_labels")) {
            for (const json& c : j.at("col_labels")) {
                ColumnLabel lab;
                lab.relay_set = c.at("T").get<std::vector<int>>();
                lab.user_index = c.at("i").get<int>();
                doc.array.col_labels.push_back(std::move(lab));
            }
            if (static_cast<int>(doc.array.col_labels.size()) != K)
                throw StructuralError("label count differs from column count");
        }
        if (j.contains("row_labels")) {
            doc.array.row_labels = j.at("row_labels").get<std::vector<std::string>>();
            if (static_cast<int>(doc.array.row_labels.size()) != F)
                throw StructuralError("row label count differs from row count");
        }
        if (j.contains("int_labels")) {
            const json& table = j.at("int_labels");
            doc.symbol_labels.resize(table.size());
            for (const json& item : table) {
                const auto s = item.at("s").get<std::size_t>();
                if (s < 1 || s > table.size())
                    throw StructuralError("symbol label index out of range");
                SymbolLabel lab;
                for (char ch : item.at("e").get<std::string>()) {
                    if (ch != '0' && ch != '1')
                        throw StructuralError("signature must be a bitstring");
                    lab.signature.push_back(ch == '1');
                }
                lab.common_relays = item.at("C").get<std::vector<int>>();
                doc.symbol_labels[s - 1] = std::move(lab);
            }
        }
        return doc;
    } catch (const json::exception& e) {
        throw StructuralError(std::string("bad array document: ") + e.what());
    }
}

void save_array(const std::string& path, const ArrayDocument& doc) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot write " + path);
    out << array_to_json(doc).dump(1) << "\n";
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

std::string simulation_report_json(const SimulationResult& r) {
    ordered_json j;
    j["scheme"] = r.scheme;
    j["measured_load"] = rational_string(r.measured_load);
    j["theory_load"] = rational_string(r.theory_load);
    j["relay_bits"] = r.relay_bits;
    j["all_correct"] = r.all_correct;
    j["seed"] = r.seed;
    j["memory_ratio"] = rational_string(r.memory_ratio);
    j["subpacketization"] = r.subpacketization;
    j["regular"] = r.regular;
    return j.dump(1) + "\n";
}

ArrayDocument load_array(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot read " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw StructuralError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
    return array_from_json(j);
}

} // namespace mcnet
