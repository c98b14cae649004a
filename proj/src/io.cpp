#include "convexa/io.hpp"

#include <iomanip>
#include <sstream>

#include "convexa/error.hpp"

namespace convexa {

using nlohmann::json;

json codewords_json(const std::vector<Codeword>& words, unsigned n) {
  json out = json::array();
  for (Codeword w : words) out.push_back(to_string(w, n));
  return out;
}

json to_json(const NeuralCode& code) { return codewords_json(code.words(), code.n()); }

json to_json(const RationalPoint& p) { return json::array({to_string(p.x), to_string(p.y)}); }

json to_json(const ObstructionReport& r, unsigned n) {
  return {{"sigma", to_string(r.sigma, n)}, {"status", to_string(r.status)}, {"reason", to_string(r.reason)}};
}

json to_json(const RealizationPlan& plan, unsigned n) {
  json extras = json::array();
  for (const Extra& e : plan.extras) extras.push_back({{"tau", to_string(e.tau, n)}, {"parent", to_string(e.parent, n)}});
  json j = {{"strategy", to_string(plan.strategy)}, {"base_code", to_json(plan.base_code)}, {"extras", extras}};
  if (plan.strategy == Strategy::PathCase)
    j["path"] = codewords_json({plan.path[0], plan.path[1], plan.path[2]}, n);
  return j;
}

json to_json(const Realization1D& r) {
  json sets = json::array();
  for (const auto& iv : r.intervals) {
    if (iv.empty()) sets.push_back(nullptr);
    else sets.push_back({{"lo", to_string(iv.lo())}, {"hi", to_string(iv.hi())}});
  }
  return {{"schema", kSchema}, {"dim", 1}, {"n", r.n}, {"sets", sets}};
}

namespace {

json ring_json(const std::vector<RationalPoint>& ring) {
  json out = json::array();
  for (const auto& p : ring) out.push_back(to_json(p));
  return out;
}

Rational rational_from(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(Errc::Parse, "expected a rational string, got " + j.dump());
}

std::vector<RationalPoint> ring_from(const json& j) {
  if (!j.is_array()) throw Error(Errc::Parse, "polygon must be an array of points");
  std::vector<RationalPoint> ring;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw Error(Errc::Parse, "point must be [x, y]");
    ring.push_back({rational_from(p[0]), rational_from(p[1])});
  }
  return ring;
}

ConvexPolygon polygon_from(const json& j) {
  try {
    return ConvexPolygon::from_ring(ring_from(j));
  } catch (const Error& e) {
    throw Error(Errc::Parse, e.what());
  }
}

Codeword codeword_from(const json& j, std::optional<unsigned> n) {
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    // Without n, a comma marks the list form and anything else is a digit string.
    return parse_codeword(text, n.value_or(text.find(',') == std::string::npos ? 9 : kMaxNeurons));
  }
  if (j.is_array()) {
    Codeword::Mask m = 0;
    for (const auto& label : j) {
      if (!label.is_number_integer()) throw Error(Errc::Parse, "neuron label must be an integer");
      const long v = label.get<long>();
      if (v < 1 || v > static_cast<long>(kMaxNeurons)) throw Error(Errc::Parse, "neuron label out of range");
      m |= Codeword::Mask{1} << (v - 1);
    }
    return Codeword(m);
  }
  throw Error(Errc::Parse, "codeword must be a string or an array");
}

}  // namespace

json to_json(const Realization2D& r) {
  json sets = json::array();
  for (const auto& p : r.polygons) sets.push_back(ring_json(p.vertices()));
  json cuts = json::array();
  for (const Cut& c : r.cuts) {
    cuts.push_back({{"tau", to_string(c.tau, r.n)},
                    {"parent", to_string(c.parent, r.n)},
                    {"halfplane", {to_string(c.plane.a), to_string(c.plane.b), to_string(c.plane.c)}},
                    {"affected", to_string(c.affected, r.n)}});
  }
  return {{"schema", kSchema}, {"dim", 2}, {"n", r.n}, {"universe", ring_json(r.universe.vertices())},
          {"sets", sets}, {"cuts", cuts}};
}

json to_json(const WitnessedCode& w) {
  json witnesses = json::object();
  for (const auto& [word, p] : w.witnesses) witnesses[to_string(word, w.code.n())] = to_json(p);
  return {{"code", to_json(w.code)}, {"witnesses", witnesses}};
}

Realization realization_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("dim") || !j.contains("sets")) throw Error(Errc::Parse, "missing dim or sets");
    const int dim = j.at("dim").get<int>();
    const auto& sets = j.at("sets");
    if (!sets.is_array()) throw Error(Errc::Parse, "sets must be an array");
    const unsigned n = j.contains("n") ? j.at("n").get<unsigned>() : static_cast<unsigned>(sets.size());
    if (n != sets.size()) throw Error(Errc::Parse, "n does not match the number of sets");
    if (n > kMaxNeurons) throw Error(Errc::Parse, "more than 64 neurons");
    if (dim == 1) {
      Realization1D r{n, {}};
      for (const auto& s : sets) {
        if (s.is_null()) r.intervals.emplace_back();
        else r.intervals.emplace_back(rational_from(s.at("lo")), rational_from(s.at("hi")));
      }
      return r;
    }
    if (dim == 2) {
      Realization2D r;
      r.n = n;
      for (const auto& s : sets) r.polygons.push_back(polygon_from(s));
      if (j.contains("universe")) r.universe = polygon_from(j.at("universe"));
      if (j.contains("cuts")) {
        for (const auto& c : j.at("cuts")) {
          const auto& hp = c.at("halfplane");
          r.cuts.push_back({codeword_from(c.at("tau"), n), codeword_from(c.at("parent"), n),
                            {rational_from(hp.at(0)), rational_from(hp.at(1)), rational_from(hp.at(2))},
                            codeword_from(c.at("affected"), n)});
        }
      }
      return r;
    }
    throw Error(Errc::Parse, "dim must be 1 or 2");
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

NeuralCode code_from_json(const json& j) {
  try {
    const json& words = j.is_array() ? j : j.at("code");
    std::optional<unsigned> n;
    if (j.is_object() && j.contains("n")) n = j.at("n").get<unsigned>();
    std::vector<Codeword> out;
    for (const auto& w : words) out.push_back(codeword_from(w, n));
    return n ? NeuralCode(*n, std::move(out)) : NeuralCode::infer(std::move(out));
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

namespace {

const char* const kPalette[] = {"#7f7f7f", "#d62728", "#2ca02c", "#1f77b4", "#ff7f0e", "#bcbd22",
                                "#9467bd", "#8c564b", "#e377c2", "#17becf"};

const char* colour(std::size_t i) { return kPalette[i % std::size(kPalette)]; }

std::string fixed(double v) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(6) << v;
  return ss.str();
}

}  // namespace

std::string render_svg(const Realization1D& r) {
  double lo = 0, hi = 1;
  bool any = false;
  for (const auto& iv : r.intervals) {
    if (iv.empty()) continue;
    lo = any ? std::min(lo, to_double(iv.lo())) : to_double(iv.lo());
    hi = any ? std::max(hi, to_double(iv.hi())) : to_double(iv.hi());
    any = true;
  }
  const double span = hi > lo ? hi - lo : 1;
  const double width = 640, margin = 60, row = 22;
  auto sx = [&](double x) { return margin + (x - lo) / span * (width - 2 * margin); };
  const double axis_y = 40 + row * static_cast<double>(r.n + 1);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << axis_y + 70
      << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << fixed(sx(lo) - 40) << "\" y1=\"" << fixed(axis_y) << "\" x2=\"" << fixed(sx(hi) + 40)
      << "\" y2=\"" << fixed(axis_y) << "\" stroke=\"black\"/>\n";
  for (std::size_t i = 0; i < r.intervals.size(); ++i) {
    const auto& iv = r.intervals[i];
    const double y = axis_y - row * static_cast<double>(i + 1);
    out << "<text x=\"8\" y=\"" << fixed(y + 4) << "\" font-size=\"12\">U" << i + 1 << "</text>\n";
    if (iv.empty()) continue;
    const double a = sx(to_double(iv.lo())), b = sx(to_double(iv.hi()));
    out << "<line x1=\"" << fixed(a) << "\" y1=\"" << fixed(y) << "\" x2=\"" << fixed(b) << "\" y2=\"" << fixed(y)
        << "\" stroke=\"" << colour(i) << "\" stroke-width=\"3\"/>\n";
    for (double e : {a, b})
      out << "<circle cx=\"" << fixed(e) << "\" cy=\"" << fixed(y) << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
    for (double e : {a, b})
      out << "<line x1=\"" << fixed(e) << "\" y1=\"" << fixed(y) << "\" x2=\"" << fixed(e) << "\" y2=\""
          << fixed(axis_y) << "\" stroke=\"#999\" stroke-dasharray=\"3,3\"/>\n";
  }
  // Label every open piece with its codeword.
  std::vector<Rational> ends;
  for (const auto& iv : r.intervals) {
    if (!iv.empty()) {
      ends.push_back(iv.lo());
      ends.push_back(iv.hi());
    }
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  for (std::size_t t = 0; t < ends.size(); ++t) {
    out << "<text x=\"" << fixed(sx(to_double(ends[t]))) << "\" y=\"" << fixed(axis_y + 16)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << to_string(ends[t]) << "</text>\n";
    if (t + 1 == ends.size()) break;
    const Rational mid = (ends[t] + ends[t + 1]) / 2;
    Codeword::Mask m = 0;
    for (std::size_t i = 0; i < r.intervals.size(); ++i) {
      if (r.intervals[i].contains(mid)) m |= Codeword::Mask{1} << i;
    }
    out << "<text x=\"" << fixed(sx(to_double(mid))) << "\" y=\"" << fixed(axis_y + 40)
        << "\" font-size=\"13\" text-anchor=\"middle\">" << to_string(Codeword(m), r.n) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_svg(const Realization2D& r, const WitnessedCode& cert) {
  const auto& uv = r.universe.vertices();
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  for (std::size_t i = 0; i < uv.size(); ++i) {
    const double x = to_double(uv[i].x), y = to_double(uv[i].y);
    if (i == 0) x0 = x1 = x, y0 = y1 = y;
    x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
  }
  const double size = 600, margin = 30;
  const double scale = (size - 2 * margin) / std::max(x1 - x0, y1 - y0);
  auto sx = [&](const Rational& x) { return margin + (to_double(x) - x0) * scale; };
  const double width = (x1 - x0) * scale + 2 * margin;
  const double height = std::max((y1 - y0) * scale + 2 * margin, 40 + 18.0 * static_cast<double>(r.n));
  auto sy = [&](const Rational& y) { return height - margin - (to_double(y) - y0) * scale; };
  auto points = [&](const std::vector<RationalPoint>& ring) {
    std::string s;
    for (const auto& p : ring) s += fixed(sx(p.x)) + "," + fixed(sy(p.y)) + " ";
    return s;
  };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width + 80) << "\" height=\""
      << fixed(height) << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<polygon points=\"" << points(uv) << "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"4,3\"/>\n";
  for (std::size_t i = 0; i < r.polygons.size(); ++i) {
    if (r.polygons[i].empty()) continue;
    out << "<polygon points=\"" << points(r.polygons[i].vertices()) << "\" fill=\"" << colour(i)
        << "\" fill-opacity=\"0.25\" stroke=\"" << colour(i) << "\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << fixed(width + 10) << "\" y=\"" << 24 + 18 * static_cast<double>(i) << "\" font-size=\"13\" fill=\""
        << colour(i) << "\">U" << i + 1 << "</text>\n";
  }
  for (const auto& [word, p] : cert.witnesses) {
    if (word.empty()) continue;
    out << "<circle cx=\"" << fixed(sx(p.x)) << "\" cy=\"" << fixed(sy(p.y)) << "\" r=\"1.5\"/>\n";
    out << "<text x=\"" << fixed(sx(p.x) + 3) << "\" y=\"" << fixed(sy(p.y) - 3) << "\" font-size=\"10\">"
        << to_string(word, r.n) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace convexa
