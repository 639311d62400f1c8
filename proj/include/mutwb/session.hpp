#pragma once
// In-memory mutation sessions behind the JSON-over-HTTP service.
//
// Routes (all bodies and responses are JSON):
//   POST /session                 {"matrix": ...} | {"triangulation": ...} | {"quiver": ...}
//   POST /session/{id}/mutate     {"k": i}
//   POST /session/{id}/flip       {"diagonal": [a, b]}
//   POST /session/{id}/undo
//   GET  /session/{id}
//
// Status codes: 400 malformed body, 404 unknown session or route, 405 wrong
// method, 409 move that is illegal for the session's current object.
//
// A session's current object is always the replay of its history from the
// initial object. Moves on one session are serialized by a per-session lock.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "mutwb/errors.hpp"
#include "mutwb/exchange.hpp"
#include "mutwb/intlinalg.hpp"
#include "mutwb/json_io.hpp"
#include "mutwb/typea.hpp"

namespace mutwb::service {

using nlohmann::json;

struct Response {
    int status = 200;
    json body;
};

using Object = std::variant<ExchangeMatrix, typea::Triangulation>;

struct MutateMove {
    std::size_t k;
};
using Move = std::variant<MutateMove, typea::FlipMove>;

inline Object apply_move(const Object& obj, const Move& move) {
    if (const auto* b = std::get_if<ExchangeMatrix>(&obj)) {
        const auto* m = std::get_if<MutateMove>(&move);
        if (!m) throw Error(Errc::NotADiagonal, "a matrix-backed session cannot flip diagonals");
        return fz_mutate(*b, m->k);
    }
    const auto& tri = std::get<typea::Triangulation>(obj);
    if (const auto* m = std::get_if<MutateMove>(&move)) {
        if (m->k >= tri.rank())
            throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(m->k) + " of " + std::to_string(tri.rank()));
        return typea::flip(tri, tri.diagonals()[m->k]).triangulation;
    }
    return typea::flip(tri, std::get<typea::FlipMove>(move).removed).triangulation;
}

inline Object replay(Object obj, const std::vector<Move>& history) {
    for (const auto& m : history) obj = apply_move(obj, m);
    return obj;
}

inline ExchangeMatrix exchange_matrix_of(const Object& obj) {
    if (const auto* b = std::get_if<ExchangeMatrix>(&obj)) return *b;
    return typea::exchange_matrix(std::get<typea::Triangulation>(obj));
}

inline json move_to_json(const Move& m) {
    if (const auto* mu = std::get_if<MutateMove>(&m)) return {{"type", "mutate"}, {"k", mu->k}};
    json j = json_io::to_json(std::get<typea::FlipMove>(m));
    j["type"] = "flip";
    return j;
}

/// Full description of an object: what GET returns apart from id/history.
inline json describe(const Object& obj) {
    const ExchangeMatrix b = exchange_matrix_of(obj);
    json j;
    if (const auto* tri = std::get_if<typea::Triangulation>(&obj)) {
        j["kind"] = "triangulation";
        j["current"] = json_io::to_json(*tri);
    } else {
        j["kind"] = "matrix";
        j["current"] = json_io::to_json(b);
    }
    j["B"] = json_io::to_json(b);
    j["quiver"] = json_io::to_json(matrix_to_quiver(b));
    j["k0"] = json_io::to_json(cokernel(b.matrix()));
    return j;
}

class SessionStore {
public:
    Response handle(std::string_view method, std::string_view path, const std::string& body) {
        const std::vector<std::string_view> parts = split_path(path);
        if (parts.empty() || parts[0] != "session") return error(404, "no such route");
        if (parts.size() == 1) {
            if (method != "POST") return error(405, "use POST /session");
            return with_body(body, [&](const json& j) { return create(j); });
        }
        const std::string id(parts[1]);
        if (parts.size() == 2) {
            if (method != "GET") return error(405, "use GET /session/{id}");
            return get(id);
        }
        if (parts.size() == 3) {
            if (method != "POST") return error(405, "moves use POST");
            if (parts[2] == "mutate") return with_body(body, [&](const json& j) { return mutate(id, j); });
            if (parts[2] == "flip") return with_body(body, [&](const json& j) { return flip(id, j); });
            if (parts[2] == "undo") return undo(id);
        }
        return error(404, "no such route");
    }

    Response create(const json& body) {
        Object initial;
        try {
            initial = parse_object(body);
        } catch (const Error& e) {
            return error(400, e.what());
        } catch (const json::exception& e) {
            return error(400, e.what());
        }
        auto session = std::make_shared<Session>();
        session->initial = initial;
        session->current = std::move(initial);
        {
            std::lock_guard lock(mu_);
            session->id = "s" + std::to_string(next_id_++);
            sessions_.emplace(session->id, session);
        }
        std::lock_guard lock(session->mu);
        return {201, state(*session)};
    }

    Response get(const std::string& id) const {
        const auto s = find(id);
        if (!s) return error(404, "unknown session '" + id + "'");
        std::lock_guard lock(s->mu);
        return {200, state(*s)};
    }

    Response mutate(const std::string& id, const json& body) {
        if (!body.is_object() || !body.contains("k") || !body["k"].is_number_integer() ||
            body["k"].get<std::int64_t>() < 0)
            return error(400, "body must be {\"k\": non-negative integer}");
        return move(id, MutateMove{body["k"].get<std::size_t>()});
    }

    Response flip(const std::string& id, const json& body) {
        typea::Diagonal d;
        try {
            if (!body.is_object() || !body.contains("diagonal")) throw Error(Errc::Parse, "missing \"diagonal\"");
            d = json_io::diagonal_from_json(body["diagonal"]);
        } catch (const Error& e) {
            return error(400, std::string("body must be {\"diagonal\": [a, b]}: ") + e.what());
        }
        return move(id, typea::FlipMove{d, d});
    }

    Response undo(const std::string& id) {
        const auto s = find(id);
        if (!s) return error(404, "unknown session '" + id + "'");
        std::lock_guard lock(s->mu);
        if (s->history.empty()) return error(409, "nothing to undo");
        s->history.pop_back();
        s->current = replay(s->initial, s->history);
        return {200, state(*s)};
    }

private:
    struct Session {
        std::string id;
        Object initial;
        Object current;
        std::vector<Move> history;
        mutable std::mutex mu;
    };

    static Response error(int status, const std::string& message) { return {status, {{"error", message}}}; }

    template <class F>
    static Response with_body(const std::string& body, F&& f) {
        json j;
        if (body.empty()) {
            j = json::object();
        } else {
            try {
                j = json::parse(body);
            } catch (const json::exception& e) {
                return error(400, e.what());
            }
        }
        return f(j);
    }

    static std::vector<std::string_view> split_path(std::string_view path) {
        std::vector<std::string_view> parts;
        while (!path.empty()) {
            const auto slash = path.find('/');
            const auto part = path.substr(0, slash);
            if (!part.empty()) parts.push_back(part);
            if (slash == std::string_view::npos) break;
            path.remove_prefix(slash + 1);
        }
        return parts;
    }

    static Object parse_object(const json& body) {
        if (!body.is_object()) throw Error(Errc::Parse, "body must be a JSON object");
        if (body.contains("matrix")) return json_io::exchange_from_json(body["matrix"]);
        if (body.contains("triangulation")) return json_io::triangulation_from_json(body["triangulation"]);
        if (body.contains("quiver")) return quiver_to_matrix(json_io::quiver_from_json(body["quiver"]));
        if (body.contains("m")) return json_io::triangulation_from_json(body);
        if (body.contains("vertices")) return quiver_to_matrix(json_io::quiver_from_json(body));
        if (body.contains("rows")) return json_io::exchange_from_json(body);
        throw Error(Errc::Parse, "expected a matrix, triangulation or quiver");
    }

    std::shared_ptr<Session> find(const std::string& id) const {
        std::lock_guard lock(mu_);
        const auto it = sessions_.find(id);
        return it == sessions_.end() ? nullptr : it->second;
    }

    Response move(const std::string& id, Move m) {
        const auto s = find(id);
        if (!s) return error(404, "unknown session '" + id + "'");
        std::lock_guard lock(s->mu);
        try {
            if (const auto* tri = std::get_if<typea::Triangulation>(&s->current)) {
                // Record the move as the flip actually performed.
                typea::Diagonal d;
                if (const auto* mu = std::get_if<MutateMove>(&m)) {
                    if (mu->k >= tri->rank())
                        throw Error(Errc::IndexOutOfRange, "no diagonal with index " + std::to_string(mu->k));
                    d = tri->diagonals()[mu->k];
                } else {
                    d = std::get<typea::FlipMove>(m).removed;
                }
                auto result = typea::flip(*tri, d);
                s->current = std::move(result.triangulation);
                s->history.emplace_back(result.move);
            } else {
                s->current = apply_move(s->current, m);
                s->history.push_back(m);
            }
        } catch (const Error& e) {
            return error(409, e.what());
        }
        return {200, state(*s)};
    }

    static json state(const Session& s) {
        json j = describe(s.current);
        j["id"] = s.id;
        j["initial"] = std::holds_alternative<ExchangeMatrix>(s.initial)
                           ? json_io::to_json(std::get<ExchangeMatrix>(s.initial))
                           : json_io::to_json(std::get<typea::Triangulation>(s.initial));
        json h = json::array();
        for (const auto& m : s.history) h.push_back(move_to_json(m));
        j["history"] = std::move(h);
        return j;
    }

    mutable std::mutex mu_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::size_t next_id_ = 1;
};

}  // namespace mutwb::service
