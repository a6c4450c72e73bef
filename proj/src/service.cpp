#include "tedei/service.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>

#include "httplib.h"

namespace tedei {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string nowUtc() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Response jsonResponse(int status, const json& j) { return {status, "application/json", j.dump()}; }

Response errorResponse(int status, const std::string& message) {
  return jsonResponse(status, json{{"error", message}});
}

std::optional<json> parseBody(const std::string& body) {
  auto j = json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  return j;
}

}  // namespace

json projectToJson(const Project& p) {
  auto accepted = json::array();
  for (const auto& a : p.accepted)
    accepted.push_back({{"axiom", axiomToJson(a.axiom)},
                        {"sourceSentence", a.sourceSentence},
                        {"alternativeIndex", a.alternativeIndex},
                        {"timestamp", a.timestamp}});
  return {{"id", p.id},
          {"name", p.name},
          {"createdAt", p.createdAt},
          {"updatedAt", p.updatedAt},
          {"accepted", accepted}};
}

Project projectFromJson(const json& j) {
  try {
    Project p;
    p.id = j.at("id").get<std::string>();
    p.name = j.at("name").get<std::string>();
    p.createdAt = j.at("createdAt").get<std::string>();
    p.updatedAt = j.at("updatedAt").get<std::string>();
    for (const auto& a : j.at("accepted")) {
      AcceptedAxiom rec;
      rec.axiom = axiomFromJson(a.at("axiom"));
      rec.sourceSentence = a.at("sourceSentence").get<std::string>();
      rec.alternativeIndex = a.at("alternativeIndex").get<std::size_t>();
      rec.timestamp = a.at("timestamp").get<std::string>();
      p.accepted.push_back(std::move(rec));
    }
    return p;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed project document: ") + e.what());
  }
}

ProjectStore::ProjectStore(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create data directory " + dir_.string() + ": " + ec.message());
  static const std::regex numbered(R"(p(\d+)\.json)");
  for (const auto& entry : fs::directory_iterator(dir_)) {
    std::smatch m;
    auto name = entry.path().filename().string();
    if (std::regex_match(name, m, numbered)) nextId_ = std::max(nextId_, std::stoul(m[1]) + 1);
  }
}

bool ProjectStore::isValidId(const std::string& id) {
  static const std::regex re(R"([A-Za-z0-9_-]{1,64})");
  return std::regex_match(id, re);
}

fs::path ProjectStore::pathFor(const std::string& id) const { return dir_ / (id + ".json"); }

Project ProjectStore::create(const std::string& name) {
  Project p;
  {
    std::lock_guard lock(storeMutex_);
    std::ostringstream id;
    id << 'p' << std::setw(4) << std::setfill('0') << nextId_++;
    p.id = id.str();
  }
  p.name = name;
  p.createdAt = p.updatedAt = nowUtc();
  save(p);
  return p;
}

std::optional<Project> ProjectStore::load(const std::string& id) const {
  if (!isValidId(id)) return std::nullopt;
  std::ifstream in(pathFor(id));
  if (!in) return std::nullopt;
  auto j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::Parse, "project file is not valid JSON: " + pathFor(id).string());
  return projectFromJson(j);
}

void ProjectStore::save(const Project& p) const {
  auto target = pathFor(p.id);
  auto temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + temp.string());
    out << projectToJson(p).dump(2) << "\n";
    if (!out.flush()) throw Error(ErrorCode::Io, "cannot write " + temp.string());
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot replace " + target.string() + ": " + ec.message());
}

std::mutex& ProjectStore::lockFor(const std::string& id) {
  std::lock_guard lock(storeMutex_);
  auto& slot = projectLocks_[id];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

Service::Service(ServiceConfig config) : config_(std::move(config)), store_(config_.dataDir) {}

Response Service::analyze(const std::string& body) const {
  auto j = parseBody(body);
  if (!j || !j->contains("sentence") || !(*j)["sentence"].is_string())
    return errorResponse(400, "expected a JSON object with a string field \"sentence\"");
  auto sentence = (*j)["sentence"].get<std::string>();
  if (sentence.find_first_not_of(" \t\r\n") == std::string::npos) return errorResponse(400, "sentence is empty");
  if (sentence.size() > config_.maxSentenceBytes)
    return errorResponse(413, "sentence exceeds " + std::to_string(config_.maxSentenceBytes) + " bytes");
  try {
    return jsonResponse(200, analysisToJson(tedei::analyze(sentence, config_.pipeline)));
  } catch (const Error& e) {
    return errorResponse(e.code() == ErrorCode::EmptySentence ? 400 : 500, e.what());
  }
}

Response Service::createProject(const std::string& body) {
  std::string name = "untitled";
  if (!body.empty()) {
    auto j = parseBody(body);
    if (!j) return errorResponse(400, "expected a JSON object");
    if (j->contains("name")) {
      if (!(*j)["name"].is_string()) return errorResponse(400, "\"name\" must be a string");
      name = (*j)["name"].get<std::string>();
    }
  }
  try {
    return jsonResponse(201, projectToJson(store_.create(name)));
  } catch (const Error& e) {
    return errorResponse(500, e.what());
  }
}

Response Service::getProject(const std::string& id) {
  try {
    std::lock_guard lock(store_.lockFor(id));
    auto p = store_.load(id);
    if (!p) return errorResponse(404, "no project " + id);
    return jsonResponse(200, projectToJson(*p));
  } catch (const Error& e) {
    return errorResponse(500, e.what());
  }
}

Response Service::accept(const std::string& id, const std::string& body) {
  auto j = parseBody(body);
  if (!j || !j->contains("sentence") || !(*j)["sentence"].is_string() || !j->contains("alternativeIndex") ||
      !(*j)["alternativeIndex"].is_number_integer())
    return errorResponse(400, "expected {\"sentence\": string, \"alternativeIndex\": integer}");
  if (!ProjectStore::isValidId(id) || !fs::exists(store_.dir() / (id + ".json")))
    return errorResponse(404, "no project " + id);
  auto sentence = (*j)["sentence"].get<std::string>();
  auto index = (*j)["alternativeIndex"].get<long long>();
  if (sentence.size() > config_.maxSentenceBytes)
    return errorResponse(413, "sentence exceeds " + std::to_string(config_.maxSentenceBytes) + " bytes");

  Analysis a;
  try {
    a = tedei::analyze(sentence, config_.pipeline);
  } catch (const Error& e) {
    return errorResponse(e.code() == ErrorCode::EmptySentence ? 400 : 500, e.what());
  }
  if (index < 0 || static_cast<std::size_t>(index) >= a.alternatives.size())
    return errorResponse(422, "alternative index " + std::to_string(index) + " is outside the " +
                                  std::to_string(a.alternatives.size()) + " alternatives for this sentence");

  AcceptedAxiom rec;
  rec.axiom = normalize(a.alternatives[static_cast<std::size_t>(index)].axiom);
  rec.sourceSentence = sentence;
  rec.alternativeIndex = static_cast<std::size_t>(index);
  rec.timestamp = nowUtc();

  try {
    std::lock_guard lock(store_.lockFor(id));
    auto p = store_.load(id);
    if (!p) return errorResponse(404, "no project " + id);
    for (const auto& existing : p->accepted)
      if (sameAxiom(existing.axiom, rec.axiom)) return errorResponse(409, "axiom already accepted: " + serializeDL(rec.axiom));
    p->accepted.push_back(rec);
    p->updatedAt = rec.timestamp;
    store_.save(*p);
  } catch (const Error& e) {
    return errorResponse(500, e.what());
  }
  auto out = projectToJson(Project{id, "", {rec}, "", ""})["accepted"][0];
  out["dl"] = serializeDL(rec.axiom);
  return jsonResponse(201, out);
}

Response Service::exportProject(const std::string& id, const std::string& format) {
  std::optional<Project> p;
  try {
    std::lock_guard lock(store_.lockFor(id));
    p = store_.load(id);
  } catch (const Error& e) {
    return errorResponse(500, e.what());
  }
  if (!p) return errorResponse(404, "no project " + id);

  std::vector<Axiom> axioms;
  for (const auto& a : p->accepted) axioms.push_back(a.axiom);

  if (format == "dl" || format.empty()) {
    std::string out;
    for (const auto& a : axioms) out += serializeDL(a) + "\n";
    return {200, "text/plain; charset=utf-8", out};
  }
  if (format == "ofn") {
    try {
      return {200, "text/owl-functional; charset=utf-8",
              serializeFunctional(axioms, config_.pipeline.ontologyIri + "/" + p->id)};
    } catch (const Error& e) {
      return errorResponse(500, e.what());
    }
  }
  if (format == "json") {
    auto arr = json::array();
    for (const auto& a : axioms) arr.push_back(axiomToJson(a));
    return jsonResponse(200, json{{"project", p->id}, {"axioms", arr}});
  }
  return errorResponse(400, "unknown export format '" + format + "' (expected dl, ofn or json)");
}

bool serve(Service& service, const std::string& host, int port,
           const std::function<void(int, std::function<void()>)>& on_ready) {
  httplib::Server server;
  server.set_payload_max_length(1 << 20);
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});

  auto reply = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body, r.contentType);
  };

  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  server.Post("/api/analyze", [&](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.analyze(req.body));
  });
  server.Post("/api/projects", [&](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.createProject(req.body));
  });
  server.Get(R"(/api/projects/([^/]+))", [&](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.getProject(req.matches[1]));
  });
  server.Post(R"(/api/projects/([^/]+)/accept)", [&](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.accept(req.matches[1], req.body));
  });
  server.Get(R"(/api/projects/([^/]+)/export)", [&](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.exportProject(req.matches[1], req.get_param_value("format")));
  });

  const auto& static_dir = service.config().staticDir;
  if (fs::is_directory(static_dir)) server.set_mount_point("/", static_dir.string());

  int bound = port;
  if (port == 0) {
    bound = server.bind_to_any_port(host);
    if (bound < 0) return false;
  } else if (!server.bind_to_port(host, port)) {
    return false;
  }
  if (on_ready) on_ready(bound, [&server] { server.stop(); });
  return server.listen_after_bind();
}

}  // namespace tedei
