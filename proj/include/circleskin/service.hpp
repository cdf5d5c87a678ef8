#pragma once

#include <string>
#include <string_view>
#include <utility>

#include <httplib.h>
#include <json.hpp>

#include "circleskin/io.hpp"

namespace circleskin {

struct ServiceResponse {
  int status = 200;
  std::string body;
};

/// POST /skin body -> response. 200 with the output document, 422 with the
/// admissibility report (or an error for other geometric failures), 400 for
/// malformed input.
inline ServiceResponse handle_skin_request(std::string_view body) {
  try {
    const InputDocument doc = parse_input(body);
    return {200, nlohmann::json(run_document(doc)).dump()};
  } catch (const InputError& e) {
    return {400, nlohmann::json{{"error", e.what()}}.dump()};
  } catch (const std::invalid_argument& e) {
    return {400, nlohmann::json{{"error", e.what()}}.dump()};
  } catch (const AdmissibilityError& e) {
    return {422, nlohmann::json(to_record(e.report())).dump()};
  } catch (const GeometryError& e) {
    return {422, nlohmann::json{{"error", e.what()}}.dump()};
  }
}

inline std::string health_body() { return nlohmann::json{{"status", "ok"}, {"version", kVersion}}.dump(); }

/// Registers the service routes. Requests share no state.
inline void install_routes(httplib::Server& server) {
  server.Post("/skin", [](const httplib::Request& req, httplib::Response& res) {
    const ServiceResponse r = handle_skin_request(req.body);
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(r.body, "application/json");
  });
  server.Options("/skin", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(health_body(), "application/json");
  });
}

}  // namespace circleskin
