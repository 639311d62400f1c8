// mutwb: command-line front end for the mutation workbench.
//
// Exit codes: 0 success, 1 verify-paper mismatch, 2 unreadable or invalid
// input, 3 vertex/diagonal index error, 4 any other domain error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "mutwb/mutwb.hpp"

namespace {

using nlohmann::json;
namespace json_io = mutwb::json_io;

constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitIndex = 3;
constexpr int kExitDomain = 4;

int exit_code_for(mutwb::Errc e) {
    switch (e) {
        case mutwb::Errc::IndexOutOfRange:
        case mutwb::Errc::NotADiagonal:
            return kExitIndex;
        case mutwb::Errc::Parse:
        case mutwb::Errc::NotSquare:
        case mutwb::Errc::NotSkewSymmetric:
        case mutwb::Errc::InvalidQuiver:
        case mutwb::Errc::LabelMismatch:
        case mutwb::Errc::DimensionMismatch:
        case mutwb::Errc::NegativeMultiplicity:
        case mutwb::Errc::WrongCount:
        case mutwb::Errc::Crossing:
        case mutwb::Errc::BoundaryEdge:
        case mutwb::Errc::PolygonTooSmall:
            return kExitParse;
        default:
            return kExitDomain;
    }
}

json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw mutwb::Error(mutwb::Errc::Parse, "cannot read " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return json_io::parse(text);
}

void write_json(const json& j, const std::string& path) {
    const std::string text = j.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw mutwb::Error(mutwb::Errc::Parse, "cannot write " + path);
    out << text;
}

int serve(const std::string& host, int port) {
    mutwb::service::SessionStore store;
    httplib::Server server;
    const auto route = [&store](const httplib::Request& req, httplib::Response& res) {
        const auto r = store.handle(req.method, req.path, req.body);
        res.status = r.status;
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_content(r.body.dump(), "application/json");
    };
    server.Get(".*", route);
    server.Post(".*", route);
    server.Options(".*", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });
    std::cerr << "mutwb serving on http://" << host << ":" << port << "\n";
    if (!server.listen(host, port)) {
        std::cerr << "error: cannot listen on " << host << ":" << port << "\n";
        return kExitDomain;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact quiver mutation workbench"};
    app.require_subcommand(1);

    std::string input, input2, output, via = "formula", fixtures_path, host = "127.0.0.1";
    std::size_t k = 0;
    int a = 0, b = 0, port = 8080;
    bool as_json = false, dump_fixtures = false;

    auto* mutate = app.add_subcommand("mutate", "Mutate an exchange matrix at vertex k");
    mutate->add_option("input", input, "Exchange matrix JSON ('-' for stdin)")->required();
    mutate->add_option("k", k, "Vertex index")->required();
    mutate->add_option("--via", via, "formula | s-matrix")->check(CLI::IsMember({"formula", "s-matrix"}));
    mutate->add_option("-o,--output", output, "Output file (default stdout)");

    auto* k0 = app.add_subcommand("k0", "Cokernel Z^n / Im B of an integer matrix");
    k0->add_option("input", input, "Matrix JSON")->required();
    k0->add_flag("--json", as_json, "Print the descriptor as JSON");

    auto* snf = app.add_subcommand("snf", "Smith normal form U A V = D");
    snf->add_option("input", input, "Matrix JSON")->required();

    auto* quiver = app.add_subcommand("quiver", "Convert between quiver, exchange matrix and triangulation forms");
    quiver->add_option("input", input, "Quiver, matrix or triangulation JSON")->required();

    auto* tflip = app.add_subcommand("typea-flip", "Flip a diagonal of a polygon triangulation");
    tflip->add_option("input", input, "Triangulation JSON")->required();
    tflip->add_option("a", a, "First endpoint")->required();
    tflip->add_option("b", b, "Second endpoint")->required();

    auto* tpath = app.add_subcommand("typea-path", "Shortest flip path and composed T between two triangulations");
    tpath->add_option("from", input, "Triangulation JSON")->required();
    tpath->add_option("to", input2, "Triangulation JSON")->required();

    auto* verify = app.add_subcommand("verify-paper", "Re-run the two worked generalized-mutation examples");
    verify->add_flag("--json", as_json, "Machine-readable report");
    verify->add_option("--fixtures", fixtures_path, "Load fixtures from JSON instead of the embedded ones");
    verify->add_flag("--dump-fixtures", dump_fixtures, "Print the embedded fixtures and exit");

    auto* srv = app.add_subcommand("serve", "Run the JSON-over-HTTP session service");
    srv->add_option("--host", host, "Bind address");
    srv->add_option("--port", port, "Port");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*mutate) {
            const auto m = json_io::exchange_from_json(read_json(input));
            const auto result = via == "formula" ? mutwb::fz_mutate(m, k) : mutwb::mutate_via_s(m, k);
            write_json(json_io::to_json(result), output);
        } else if (*k0) {
            const auto g = mutwb::cokernel(json_io::matrix_from_json(read_json(input)));
            if (as_json) write_json(json_io::to_json(g), "");
            else std::cout << g.to_string() << "\n";
        } else if (*snf) {
            write_json(json_io::to_json(mutwb::snf(json_io::matrix_from_json(read_json(input)))), "");
        } else if (*quiver) {
            const json j = read_json(input);
            if (j.contains("vertices")) write_json(json_io::to_json(mutwb::quiver_to_matrix(json_io::quiver_from_json(j))), "");
            else if (j.contains("m")) write_json(json_io::to_json(mutwb::typea::quiver_of(json_io::triangulation_from_json(j))), "");
            else write_json(json_io::to_json(mutwb::matrix_to_quiver(json_io::exchange_from_json(j))), "");
        } else if (*tflip) {
            const auto tri = json_io::triangulation_from_json(read_json(input));
            const auto r = mutwb::typea::flip(tri, {a, b});
            write_json({{"triangulation", json_io::to_json(r.triangulation)},
                        {"move", json_io::to_json(r.move)},
                        {"B", json_io::to_json(mutwb::typea::exchange_matrix(r.triangulation))}},
                       "");
        } else if (*tpath) {
            const auto from = json_io::triangulation_from_json(read_json(input));
            const auto to = json_io::triangulation_from_json(read_json(input2));
            json moves = json::array();
            for (const auto& mv : mutwb::typea::flip_path(from, to)) moves.push_back(json_io::to_json(mv));
            const std::size_t length = moves.size();
            write_json({{"moves", std::move(moves)},
                        {"length", length},
                        {"T", json_io::to_json(mutwb::typea::composed_t(from, to))}},
                       "");
        } else if (*verify) {
            if (dump_fixtures) {
                write_json(mutwb::paper::to_json(mutwb::paper::default_fixtures()), "");
                return 0;
            }
            const auto fixtures = fixtures_path.empty() ? mutwb::paper::default_fixtures()
                                                        : mutwb::paper::fixtures_from_json(read_json(fixtures_path));
            const auto report = mutwb::paper::verify(fixtures);
            if (as_json) write_json(report.to_json(), "");
            else std::cout << report.text();
            return report.passed() ? 0 : kExitMismatch;
        } else if (*srv) {
            return serve(host, port);
        }
    } catch (const mutwb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return 0;
}
