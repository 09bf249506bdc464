#include "core/jsonio.hpp"

namespace cipow {

namespace {

const Json& must_field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object())
    throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

int decode_int(const Json& j, const std::string& where) {
  const BigInt v = decode_integer(j, where);
  if (!fits_int64(v))
    throw ParseError(where + ": value out of range");
  return static_cast<int>(to_int64(v));
}

}  // namespace

Json encode_integer(const BigInt& v) {
  if (fits_int64(v)) return Json(to_int64(v));
  return Json(to_decimal(v));
}

BigInt decode_integer(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) {
    const auto u = j.get<std::uint64_t>();
    BigInt out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
    return out;
  }
  if (j.is_string()) {
    try {
      return parse_decimal(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected an integer or a decimal string");
}

Json betti_to_json(const BettiTable& table) {
  Json j;
  j["r"] = table.r;
  j["s"] = table.s;
  Json columns = Json::array();
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    Json column;
    column["i"] = i;
    Json twists = Json::array();
    for (const auto& [shift, mult] : table.columns[i]) {
      Json entry;
      entry["shift"] = shift;
      entry["mult"] = encode_integer(mult);
      twists.push_back(std::move(entry));
    }
    column["twists"] = std::move(twists);
    columns.push_back(std::move(column));
  }
  j["columns"] = std::move(columns);
  return j;
}

BettiTable betti_from_json(const Json& j) {
  BettiTable table;
  table.r = decode_int(must_field(j, "r", "betti"), "betti.r");
  table.s = decode_int(must_field(j, "s", "betti"), "betti.s");
  if (table.r < 1) throw ParseError("betti.r: must be >= 1");
  const Json& columns = must_field(j, "columns", "betti");
  if (!columns.is_array() || static_cast<int>(columns.size()) != table.r)
    throw ParseError("betti.columns: expected an array of exactly r columns");
  table.columns.assign(static_cast<std::size_t>(table.r), {});
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const std::string where = "betti.columns[" + std::to_string(i) + "]";
    const int index = decode_int(must_field(columns[i], "i", where), where + ".i");
    if (index != static_cast<int>(i))
      throw ParseError(where + ".i: columns must appear in order 0..r-1");
    const Json& twists = must_field(columns[i], "twists", where);
    if (!twists.is_array()) throw ParseError(where + ".twists: expected an array");
    for (std::size_t k = 0; k < twists.size(); ++k) {
      const std::string entry_where = where + ".twists[" + std::to_string(k) + "]";
      const long shift = static_cast<long>(to_int64(
          decode_integer(must_field(twists[k], "shift", entry_where), entry_where + ".shift")));
      const BigInt mult =
          decode_integer(must_field(twists[k], "mult", entry_where), entry_where + ".mult");
      if (mult < 1) throw ParseError(entry_where + ".mult: must be >= 1");
      if (!table.columns[i].emplace(shift, mult).second)
        throw ParseError(entry_where + ".shift: repeated twist");
    }
  }
  return table;
}

Json hilbert_to_json(const HilbertData& data) {
  Json j;
  j["ambient"] = data.ambient;
  Json values = Json::array();
  for (const BigInt& v : data.values) values.push_back(encode_integer(v));
  j["values"] = std::move(values);
  Json numerator = Json::array();
  for (const BigInt& c : data.numerator) numerator.push_back(encode_integer(c));
  j["numerator"] = std::move(numerator);
  return j;
}

HilbertData hilbert_from_json(const Json& j) {
  HilbertData data;
  data.ambient = decode_int(must_field(j, "ambient", "hilbert"), "hilbert.ambient");
  const Json& values = must_field(j, "values", "hilbert");
  if (!values.is_array()) throw ParseError("hilbert.values: expected an array");
  for (std::size_t i = 0; i < values.size(); ++i)
    data.values.push_back(
        decode_integer(values[i], "hilbert.values[" + std::to_string(i) + "]"));
  const Json& numerator = must_field(j, "numerator", "hilbert");
  if (!numerator.is_array()) throw ParseError("hilbert.numerator: expected an array");
  for (std::size_t i = 0; i < numerator.size(); ++i)
    data.numerator.push_back(
        decode_integer(numerator[i], "hilbert.numerator[" + std::to_string(i) + "]"));
  return data;
}

std::string hilbert_to_csv(const HilbertData& data) {
  std::string out = "degree,value\n";
  for (std::size_t t = 0; t < data.values.size(); ++t) {
    out += std::to_string(t);
    out += ',';
    out += to_decimal(data.values[t]);
    out += '\n';
  }
  return out;
}

Json hhs_to_json(const CIType& type, int s, const HHSReport& report) {
  Json j;
  j["type"] = type.degrees();
  j["power"] = s;
  j["m"] = report.min_shifts;
  j["M"] = report.max_shifts;
  j["table_m"] = report.table_min;
  j["table_M"] = report.table_max;
  j["shifts_match"] = report.shifts_match;
  j["multiplicity"] = encode_integer(report.mult);
  j["lower"] = to_fraction(report.lower);
  j["upper"] = to_fraction(report.upper);
  j["holds"] = report.holds;
  return j;
}

std::string hhs_summary(const HHSReport& report) {
  return to_fraction(report.lower) + " <= " + to_decimal(report.mult) +
         " <= " + to_fraction(report.upper) + " : " +
         (report.holds ? "HOLDS" : "FAILS");
}

namespace {

Json interval_to_json(const Interval& interval) {
  Json j;
  j["lo"] = interval.lo;
  j["hi"] = interval.hi;
  return j;
}

}  // namespace

Json invariant_report_to_json(const InvariantReport& report) {
  Json j;
  if (report.alpha) j["alpha"] = interval_to_json(*report.alpha);
  if (report.reg_index) j["ri"] = interval_to_json(*report.reg_index);
  j["deg"] = encode_integer(report.degree);
  j["notes"] = report.notes;
  return j;
}

Json sandwich_to_json(const CIType& type, const std::vector<int>& mults,
                      const SandwichReport& report) {
  Json j;
  j["type"] = type.degrees();
  j["mults"] = mults;
  j["min_mult"] = report.min_mult;
  j["max_mult"] = report.max_mult;
  j["report"] = invariant_report_to_json(report.report);
  Json lower = Json::array(), upper = Json::array();
  for (const BigInt& v : report.lower_hf.values) lower.push_back(encode_integer(v));
  for (const BigInt& v : report.upper_hf.values) upper.push_back(encode_integer(v));
  j["hf_lower"] = std::move(lower);
  j["hf_upper"] = std::move(upper);
  return j;
}

Json points_to_json(const PointConfig& config) {
  Json j;
  j["ambient"] = config.ambient;
  Json points = Json::array();
  for (const FatPoint& point : config.points) {
    Json p;
    Json coords = Json::array();
    for (const BigRat& c : point.coords) coords.push_back(to_fraction(c));
    p["coords"] = std::move(coords);
    p["mult"] = point.mult;
    points.push_back(std::move(p));
  }
  j["points"] = std::move(points);
  return j;
}

PointConfig points_from_json(const Json& j) {
  PointConfig config;
  config.ambient = decode_int(must_field(j, "ambient", "config"), "config.ambient");
  const Json& points = must_field(j, "points", "config");
  if (!points.is_array()) throw ParseError("config.points: expected an array");
  for (std::size_t p = 0; p < points.size(); ++p) {
    const std::string where = "config.points[" + std::to_string(p) + "]";
    FatPoint point;
    const Json& coords = must_field(points[p], "coords", where);
    if (!coords.is_array()) throw ParseError(where + ".coords: expected an array");
    for (std::size_t c = 0; c < coords.size(); ++c) {
      const std::string coord_where = where + ".coords[" + std::to_string(c) + "]";
      const Json& entry = coords[c];
      try {
        if (entry.is_string()) {
          point.coords.push_back(parse_fraction(entry.get<std::string>()));
        } else if (entry.is_number_integer() || entry.is_number_unsigned()) {
          point.coords.emplace_back(decode_integer(entry, coord_where));
        } else {
          throw ParseError(coord_where + ": expected a rational string");
        }
      } catch (const std::invalid_argument& e) {
        throw ParseError(coord_where + ": " + e.what());
      }
    }
    point.mult = decode_int(must_field(points[p], "mult", where), where + ".mult");
    config.points.push_back(std::move(point));
  }
  validate(config);
  return config;
}

PointConfig grid_from_json(const Json& j) {
  std::vector<std::vector<BigRat>> axes;
  if (j.contains("lists")) {
    const Json& lists = j["lists"];
    if (!lists.is_array() || lists.empty())
      throw ParseError("grid.lists: expected a non-empty array of value lists");
    for (std::size_t a = 0; a < lists.size(); ++a) {
      const std::string where = "grid.lists[" + std::to_string(a) + "]";
      if (!lists[a].is_array() || lists[a].empty())
        throw ParseError(where + ": expected a non-empty array");
      std::vector<BigRat> axis;
      for (std::size_t v = 0; v < lists[a].size(); ++v) {
        const Json& entry = lists[a][v];
        const std::string entry_where = where + "[" + std::to_string(v) + "]";
        try {
          if (entry.is_string())
            axis.push_back(parse_fraction(entry.get<std::string>()));
          else
            axis.emplace_back(decode_integer(entry, entry_where));
        } catch (const std::invalid_argument& e) {
          throw ParseError(entry_where + ": " + e.what());
        }
      }
      axes.push_back(std::move(axis));
    }
  } else if (j.contains("sizes")) {
    const Json& sizes = j["sizes"];
    if (!sizes.is_array() || sizes.empty())
      throw ParseError("grid.sizes: expected a non-empty array of axis sizes");
    std::vector<int> values;
    for (std::size_t a = 0; a < sizes.size(); ++a)
      values.push_back(decode_int(sizes[a], "grid.sizes[" + std::to_string(a) + "]"));
    try {
      axes = integer_axes(values);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("grid.sizes: ") + e.what());
    }
  } else {
    throw ParseError("grid: needs either \"lists\" or \"sizes\"");
  }

  std::vector<int> mults;
  if (j.contains("mults")) {
    const Json& entries = j["mults"];
    if (!entries.is_array())
      throw ParseError("grid.mults: expected an array");
    for (std::size_t i = 0; i < entries.size(); ++i)
      mults.push_back(decode_int(entries[i], "grid.mults[" + std::to_string(i) + "]"));
  } else if (j.contains("mult")) {
    mults.push_back(decode_int(j["mult"], "grid.mult"));
  } else {
    mults.push_back(1);
  }
  return grid_points(axes, mults);
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cipow
