#include "partspace/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace partspace {

namespace {

using nlohmann::json;

std::size_t read_count(const json& obj, const char* key) {
    if (!obj.contains(key) || !obj.at(key).is_number_unsigned()) {
        throw InvalidParameter(std::string("\"") + key + "\" must be a non-negative integer");
    }
    return obj.at(key).get<std::size_t>();
}

PartitionMatrix matrix_from_json(const json& obj) {
    if (!obj.is_object()) throw InvalidParameter("partition JSON must be an object");
    if (obj.contains("labels")) {
        const auto& labels_json = obj.at("labels");
        if (!labels_json.is_array()) throw InvalidParameter("\"labels\" must be an array");
        std::vector<int> labels;
        labels.reserve(labels_json.size());
        for (const auto& v : labels_json) {
            if (!v.is_number_integer()) throw InvalidParameter("labels must be integers");
            labels.push_back(v.get<int>());
        }
        return PartitionMatrix::from_labels(labels, read_count(obj, "l"));
    }
    if (!obj.contains("rows")) {
        throw InvalidParameter("soft partition needs \"l\", \"m\" and \"rows\"");
    }
    const std::size_t l = read_count(obj, "l");
    const std::size_t m = read_count(obj, "m");
    const auto& rows = obj.at("rows");
    if (!rows.is_array() || rows.size() != l) {
        throw InvalidParameter("\"rows\" must be an array of l rows");
    }
    std::vector<double> entries;
    entries.reserve(l * m);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != m) {
            throw InvalidParameter("every row must hold m numbers");
        }
        for (const auto& v : row) {
            if (!v.is_number()) throw InvalidParameter("entries must be numbers");
            entries.push_back(v.get<double>());
        }
    }
    return PartitionMatrix::validated(l, m, std::move(entries));
}

json matrix_to_json(const PartitionMatrix& matrix) {
    json obj = json::object();
    if (matrix.is_hard()) {
        obj["labels"] = matrix.argmax_labels();
        obj["l"] = matrix.n_clusters();
        return obj;
    }
    obj["l"] = matrix.n_clusters();
    obj["m"] = matrix.n_points();
    json rows = json::array();
    for (std::size_t k = 0; k < matrix.n_clusters(); ++k) {
        const auto row = matrix.row(k);
        rows.push_back(std::vector<double>(row.begin(), row.end()));
    }
    obj["rows"] = std::move(rows);
    return obj;
}

json parse(const std::string& text) {
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) throw InvalidParameter("malformed JSON");
    return parsed;
}

template <typename Fn>
auto rethrow_json_errors(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const json::exception& err) {
        throw InvalidParameter(std::string("malformed partition JSON: ") + err.what());
    }
}

}  // namespace

PartitionMatrix read_partition_json(const std::string& text) {
    return rethrow_json_errors([&] { return matrix_from_json(parse(text)); });
}

PartitionMatrix read_partition_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            try {
                std::size_t consumed = 0;
                const double value = std::stod(cell, &consumed);
                if (cell.find_first_not_of(" \t\r", consumed) != std::string::npos) {
                    throw InvalidParameter("trailing characters in CSV cell '" + cell + "'");
                }
                row.push_back(value);
            } catch (const std::invalid_argument&) {
                throw InvalidParameter("CSV cell '" + cell + "' is not a number");
            } catch (const std::out_of_range&) {
                throw InvalidParameter("CSV cell '" + cell + "' is out of range");
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw EmptyInput();
    const std::size_t m = rows.front().size();
    std::vector<double> entries;
    entries.reserve(rows.size() * m);
    for (const auto& row : rows) {
        if (row.size() != m) throw InvalidParameter("CSV rows have uneven lengths");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return PartitionMatrix::validated(rows.size(), m, std::move(entries));
}

PartitionMatrix read_partition_file(const std::string& path) {
    const std::string text = read_text_file(path);
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
        return read_partition_csv(text);
    }
    return read_partition_json(text);
}

std::string write_partition_json(const PartitionMatrix& matrix) {
    return matrix_to_json(matrix).dump();
}

std::vector<PartitionMatrix> read_bundle_json(const std::string& text) {
    return rethrow_json_errors([&] {
        const json parsed = parse(text);
        if (!parsed.is_array()) throw InvalidParameter("bundle must be a JSON array");
        std::vector<PartitionMatrix> out;
        out.reserve(parsed.size());
        for (const auto& item : parsed) out.push_back(matrix_from_json(item));
        return out;
    });
}

std::string write_bundle_json(const std::vector<PartitionMatrix>& members) {
    json arr = json::array();
    for (const PartitionMatrix& member : members) arr.push_back(matrix_to_json(member));
    return arr.dump();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidParameter("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidParameter("cannot write '" + path + "'");
    out << content;
}

}  // namespace partspace
