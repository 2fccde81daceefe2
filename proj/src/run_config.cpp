#include "tempograph/run_config.hpp"

#include <fstream>

namespace tempograph {

namespace {

template <typename T>
void read_if(const Json& doc, const char* key, T& target) {
    if (auto it = doc.find(key); it != doc.end() && !it->is_null()) target = it->get<T>();
}

}  // namespace

void apply_json(EncodingConfig& c, const Json& doc) {
    if (!doc.is_object()) throw ArgumentError("encoding config must be a JSON object");
    read_if(doc, "q", c.bins);
    if (auto it = doc.find("binning"); it != doc.end()) c.binning = parse_binning_mode(it->get<std::string>());
    read_if(doc, "normalize", c.normalize);
    read_if(doc, "m", c.segment_len);
    read_if(doc, "size", c.target_size);
    if (auto it = doc.find("kernel"); it != doc.end()) c.kernel.type = parse_kernel_type(it->get<std::string>());
    read_if(doc, "sigma", c.kernel.sigma);
    read_if(doc, "threshold", c.threshold);
    read_if(doc, "resolution", c.resolution);
    read_if(doc, "seed", c.seed);
    read_if(doc, "damping", c.damping);
}

Json to_json(const EncodingConfig& c) {
    return {{"q", c.bins},
            {"binning", to_string(c.binning)},
            {"normalize", c.normalize},
            {"m", c.segment_len},
            {"size", c.target_size},
            {"kernel", to_string(c.kernel.type)},
            {"sigma", c.kernel.sigma},
            {"threshold", c.threshold},
            {"resolution", c.resolution},
            {"seed", c.seed},
            {"damping", c.damping}};
}

void apply_json(RunConfig& c, const Json& doc) {
    if (!doc.is_object()) throw ArgumentError("config document must be a JSON object");
    apply_json(c.encoding, doc);
    if (auto it = doc.find("input"); it != doc.end()) c.input = it->get<std::string>();
    if (auto it = doc.find("test"); it != doc.end()) c.test_input = it->get<std::string>();
    if (auto it = doc.find("gen"); it != doc.end()) {
        c.generator = it->is_string() ? read_json_file(it->get<std::string>()) : *it;
    }
    if (auto it = doc.find("delimiter"); it != doc.end()) c.delimiter = parse_delimiter(it->get<std::string>());
    read_if(doc, "row", c.row);
    if (auto it = doc.find("kh"); it != doc.end()) c.k_h = it->get<Index>();
    if (auto it = doc.find("ks"); it != doc.end()) c.k_s = it->get<Index>();
    if (auto it = doc.find("alpha"); it != doc.end()) {
        c.alphas = it->is_array() ? it->get<std::vector<double>>() : std::vector<double>{it->get<double>()};
    }
    read_if(doc, "features", c.features);
    if (auto it = doc.find("out"); it != doc.end()) c.out = it->get<std::string>();
}

void RunConfig::validate() const {
    encoding.validate();
    if (row < 0) throw ArgumentError("row must be >= 0");
    if (k_h && *k_h < 0) throw ArgumentError("kh must be >= 0");
    if (k_s && *k_s < 0) throw ArgumentError("ks must be >= 0");
    if (alphas.empty()) throw ArgumentError("at least one alpha is required");
    if (features != "raw" && features != "combined" && features != "both") {
        throw ArgumentError("features must be raw, combined or both");
    }
}

BaseShape parse_base_shape(const std::string& text) {
    if (text == "sine") return BaseShape::Sine;
    if (text == "square") return BaseShape::Square;
    if (text == "sawtooth") return BaseShape::Sawtooth;
    throw ArgumentError("unknown base shape '" + text + "'");
}

RareShape parse_rare_shape(const std::string& text) {
    if (text == "notch") return RareShape::Notch;
    if (text == "fine_feature") return RareShape::FineFeature;
    if (text == "undersample") return RareShape::UnderSample;
    throw ArgumentError("unknown rare pattern '" + text + "'");
}

CompoundSpec compound_from_json(const Json& doc) {
    CompoundSpec s;
    read_if(doc, "length", s.length);
    if (auto it = doc.find("base"); it != doc.end()) s.base = parse_base_shape(it->get<std::string>());
    read_if(doc, "period", s.period);
    read_if(doc, "amplitude", s.amplitude);
    read_if(doc, "phase", s.phase);
    if (auto it = doc.find("rare"); it != doc.end()) s.rare = parse_rare_shape(it->get<std::string>());
    read_if(doc, "notch_level", s.notch_level);
    read_if(doc, "fine_period", s.fine_period);
    read_if(doc, "fine_amplitude", s.fine_amplitude);
    read_if(doc, "hold", s.hold);
    read_if(doc, "noise", s.noise);
    read_if(doc, "seed", s.seed);
    if (auto it = doc.find("intervals"); it != doc.end()) {
        for (const auto& pair : *it) {
            if (!pair.is_array() || pair.size() != 2) throw ArgumentError("intervals must be [start, end) pairs");
            s.intervals.push_back({pair[0].get<Index>(), pair[1].get<Index>()});
        }
    }
    return s;
}

GeneratedSeries generate(const Json& doc) {
    if (!doc.is_object()) throw ArgumentError("generator spec must be a JSON object");
    const std::string type = doc.value("type", std::string{});
    if (type == "compound") return gen_compound(compound_from_json(doc));

    const Index steps = doc.value("steps", Index{2000});
    const double dt = doc.value("dt", 0.01);
    State3 initial{1.0, 1.0, 1.0};
    if (auto it = doc.find("initial"); it != doc.end()) {
        if (!it->is_array() || it->size() != 3) throw ArgumentError("initial must be a 3-vector");
        initial = {(*it)[0].get<double>(), (*it)[1].get<double>(), (*it)[2].get<double>()};
    }
    GeneratedSeries out;
    if (type == "lorenz") {
        LorenzParams p;
        read_if(doc, "sigma", p.sigma);
        read_if(doc, "rho", p.rho);
        read_if(doc, "beta", p.beta);
        out.series = gen_lorenz(steps, dt, initial, p);
    } else if (type == "rossler") {
        RosslerParams p;
        read_if(doc, "a", p.a);
        read_if(doc, "b", p.b);
        read_if(doc, "c", p.c);
        out.series = gen_rossler(steps, dt, initial, p);
    } else {
        throw ArgumentError("unknown generator type '" + type + "' (expected lorenz, rossler or compound)");
    }
    // Leading transient samples can be dropped with "discard".
    const Index discard = doc.value("discard", Index{0});
    if (discard < 0 || discard > out.series.size() - 2) throw ArgumentError("discard out of range");
    if (discard > 0) {
        out.series.values = out.series.values.tail(out.series.size() - discard).eval();
    }
    return out;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ArgumentError(path.string() + ": " + e.what());
    }
}

}  // namespace tempograph
