#include "confscale/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "confscale/workload.hpp"

namespace confscale {

namespace {

using nlohmann::json;

int int_field(const json& doc, const char* key)
{
    if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    const auto& v = doc.at(key);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::vector<Count> int_array(const json& doc, const char* key)
{
    if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    const auto& v = doc.at(key);
    if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
    std::vector<Count> out;
    out.reserve(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v[k].is_number_integer())
            throw ParseError(std::string("field '") + key + "' slot " + std::to_string(k + 1) +
                             " is not an integer");
        out.push_back(v[k].get<Count>());
    }
    return out;
}

json parse_object(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("expected a JSON object");
    return doc;
}

}  // namespace

std::pair<Config, Workload> parse_workload(std::string_view text)
{
    const auto doc = parse_object(text);
    Config config{int_field(doc, "n"), int_field(doc, "delta"), int_field(doc, "theta")};
    try {
        validate(config);
    } catch (const ConfigError& e) {
        throw ParseError(e.what());
    }
    Workload w{int_array(doc, "arrivals"), int_array(doc, "departures")};
    validate(w, config);
    return {config, std::move(w)};
}

std::string format_workload(const Config& config, const Workload& workload)
{
    nlohmann::ordered_json doc;
    doc["n"] = config.n;
    doc["delta"] = config.delta;
    doc["theta"] = config.theta;
    doc["arrivals"] = workload.arrivals;
    doc["departures"] = workload.departures;
    return doc.dump() + "\n";
}

ScheduleFile parse_schedule(std::string_view text)
{
    const auto doc = parse_object(text);
    ScheduleFile f{int_field(doc, "n"), int_field(doc, "delta"), Schedule{int_array(doc, "changes")}};
    if (f.schedule.horizon() != f.n)
        throw ParseError("changes length " + std::to_string(f.schedule.horizon()) +
                         " does not match n=" + std::to_string(f.n));
    return f;
}

std::string format_schedule(const Config& config, const Schedule& schedule)
{
    nlohmann::ordered_json doc;
    doc["n"] = config.n;
    doc["delta"] = config.delta;
    doc["changes"] = schedule.changes;
    return doc.dump() + "\n";
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << contents;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace confscale
