// tempograph command-line front end: encode / discover / anomaly / classify / serve.

#include "tempograph/commands.hpp"
#include "tempograph/service.hpp"

#include <CLI11.hpp>
#include <httplib.h>

#include <cstdlib>
#include <iostream>

namespace tg = tempograph;

namespace {

struct Flags {
    std::string input, test, gen, delimiter = "auto", binning = "gaussian", kernel = "gaussian";
    std::string config_file, features = "both", out = "out";
    long long row = 0, m = 1, size = 0;
    int q = 10;
    double sigma = 0.0, threshold = 0.0, resolution = 1.0, damping = 0.85;
    std::uint64_t seed = 0;
    bool no_normalize = false;
    long long kh = -1, ks = -1;
    std::vector<double> alpha{1.0};
};

void add_run_options(CLI::App* cmd, Flags& f) {
    cmd->add_option("--input", f.input, "UCR-format input file (train split for classify)");
    cmd->add_option("--test", f.test, "UCR-format test split (classify)");
    cmd->add_option("--gen", f.gen, "generator spec: JSON file path or inline JSON object");
    cmd->add_option("--delimiter", f.delimiter, "auto | comma | tab")->capture_default_str();
    cmd->add_option("--row", f.row, "row of the input file to encode")->capture_default_str();
    cmd->add_option("--q", f.q, "number of quantization bins Q")->capture_default_str();
    cmd->add_option("--binning", f.binning, "gaussian | quantile")->capture_default_str();
    cmd->add_option("--m", f.m, "blur patch size m (samples per vertex)")->capture_default_str();
    cmd->add_option("--size", f.size, "target field side S; overrides --m with m = ceil(n/S)")->capture_default_str();
    cmd->add_option("--kernel", f.kernel, "blur kernel: gaussian | average")->capture_default_str();
    cmd->add_option("--sigma", f.sigma, "gaussian kernel width in cells (0 = m/2)")->capture_default_str();
    cmd->add_option("--threshold", f.threshold, "drop edges with weight <= threshold")->capture_default_str();
    cmd->add_option("--resolution", f.resolution, "Louvain resolution")->capture_default_str();
    cmd->add_option("--seed", f.seed, "Louvain visit-order seed (default: $TEMPOGRAPH_SEED or 0)")
        ->capture_default_str();
    cmd->add_option("--damping", f.damping, "PageRank damping factor")->capture_default_str();
    cmd->add_flag("--no-normalize", f.no_normalize, "skip z-normalization before binning");
    cmd->add_option("--kh", f.kh, "anomaly: size of the isolation set H (default max(1, ceil(0.05 V)))");
    cmd->add_option("--ks", f.ks, "anomaly: size of the low-clustering set S (default as --kh)");
    cmd->add_option("--alpha", f.alpha, "classify: weight(s) of the standardized statistics")->capture_default_str();
    cmd->add_option("--features", f.features, "classify: raw | combined | both")->capture_default_str();
    cmd->add_option("--out", f.out, "output directory")->capture_default_str();
    cmd->add_option("--config", f.config_file, "JSON config file; its keys override the flags");
}

tg::RunConfig to_config(const Flags& f, bool seed_given) {
    tg::RunConfig c;
    if (!f.input.empty()) c.input = f.input;
    if (!f.test.empty()) c.test_input = f.test;
    if (!f.gen.empty()) {
        c.generator = f.gen.front() == '{' ? tg::Json::parse(f.gen) : tg::read_json_file(f.gen);
    }
    c.delimiter = tg::parse_delimiter(f.delimiter);
    c.row = f.row;
    c.encoding.bins = f.q;
    c.encoding.binning = tg::parse_binning_mode(f.binning);
    c.encoding.normalize = !f.no_normalize;
    c.encoding.segment_len = f.m;
    c.encoding.target_size = f.size;
    c.encoding.kernel.type = tg::parse_kernel_type(f.kernel);
    c.encoding.kernel.sigma = f.sigma;
    c.encoding.threshold = f.threshold;
    c.encoding.resolution = f.resolution;
    c.encoding.damping = f.damping;
    c.encoding.seed = f.seed;
    if (!seed_given) {
        if (const char* env = std::getenv("TEMPOGRAPH_SEED")) c.encoding.seed = std::stoull(env);
    }
    if (f.kh >= 0) c.k_h = f.kh;
    if (f.ks >= 0) c.k_s = f.ks;
    c.alphas = f.alpha;
    c.features = f.features;
    c.out = f.out;
    if (!f.config_file.empty()) tg::apply_json(c, tg::read_json_file(f.config_file));
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tempograph: Markov transition field graphs for time series"};
    app.require_subcommand(1);

    Flags flags;
    std::vector<CLI::App*> run_commands = {
        app.add_subcommand("encode", "write the transition field, Markov matrix, graph and statistics"),
        app.add_subcommand("discover", "map graph communities back to raw-signal shapelets"),
        app.add_subcommand("anomaly", "rank anomaly candidates (isolation set H u low-clustering set S)"),
        app.add_subcommand("classify", "1-NN on raw and raw+network-statistics features"),
    };
    for (auto* cmd : run_commands) add_run_options(cmd, flags);

    auto* serve = app.add_subcommand("serve", "HTTP API for the explorer");
    std::string host = "127.0.0.1", static_dir;
    int port = 8080;
    long long idle_timeout = 1800, max_length = 4096;
    serve->add_option("--host", host, "bind address")->capture_default_str();
    serve->add_option("--port", port, "listen port")->envname("TEMPOGRAPH_PORT")->capture_default_str();
    serve->add_option("--timeout", idle_timeout, "session idle timeout in seconds")->capture_default_str();
    serve->add_option("--max-length", max_length, "largest accepted series (413 above)")->capture_default_str();
    serve->add_option("--static-dir", static_dir, "directory of UI assets served at /");

    CLI11_PARSE(app, argc, argv);

    try {
        if (serve->parsed()) {
            tg::ServiceOptions options;
            options.idle_timeout = std::chrono::seconds(idle_timeout);
            options.max_series_length = max_length;
            tg::Service service(options);
            httplib::Server server;
            service.mount(server, static_dir);
            std::cerr << "listening on " << host << ":" << port << "\n";
            return server.listen(host, port) ? 0 : 1;
        }

        CLI::App* active = nullptr;
        for (auto* cmd : run_commands) {
            if (cmd->parsed()) active = cmd;
        }
        const bool seed_given = active->count("--seed") > 0;
        const tg::RunConfig config = to_config(flags, seed_given);

        std::vector<std::filesystem::path> written;
        const std::string name = active->get_name();
        if (name == "encode") written = tg::cmd_encode(config);
        if (name == "discover") written = tg::cmd_discover(config);
        if (name == "anomaly") written = tg::cmd_anomaly(config);
        if (name == "classify") written = tg::cmd_classify(config);
        for (const auto& p : written) std::cout << p.string() << "\n";
        return 0;
    } catch (const tg::ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tg::Json::exception& e) {
        std::cerr << "error: bad JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
