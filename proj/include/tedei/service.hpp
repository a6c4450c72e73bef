#pragma once

// HTTP facade for the authoring loop. Handlers are plain functions from a
// request body to {status, contentType, body} so they can be tested without a
// socket; `serve` binds them to routes.

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "tedei/pipeline.hpp"

namespace tedei {

struct AcceptedAxiom {
  Axiom axiom;
  std::string sourceSentence;
  std::size_t alternativeIndex = 0;
  std::string timestamp;  // ISO 8601, UTC
};

struct Project {
  std::string id;
  std::string name;
  std::vector<AcceptedAxiom> accepted;
  std::string createdAt;
  std::string updatedAt;
};

nlohmann::json projectToJson(const Project& p);
Project projectFromJson(const nlohmann::json& j);

// One JSON file per project under `dir`, replaced via write-temp-then-rename.
class ProjectStore {
 public:
  explicit ProjectStore(std::filesystem::path dir);

  Project create(const std::string& name);
  std::optional<Project> load(const std::string& id) const;
  void save(const Project& p) const;
  // Lock held while a project is read, modified and written back.
  std::mutex& lockFor(const std::string& id);

  static bool isValidId(const std::string& id);
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path pathFor(const std::string& id) const;

  std::filesystem::path dir_;
  std::mutex storeMutex_;
  std::size_t nextId_ = 1;
  std::map<std::string, std::unique_ptr<std::mutex>> projectLocks_;
};

struct ServiceConfig {
  std::filesystem::path dataDir = "tedei-data";
  std::filesystem::path staticDir = "web";
  std::size_t maxSentenceBytes = 2000;
  PipelineConfig pipeline;
};

struct Response {
  int status = 200;
  std::string contentType = "application/json";
  std::string body;
};

class Service {
 public:
  explicit Service(ServiceConfig config);

  Response analyze(const std::string& body) const;
  Response createProject(const std::string& body);
  Response getProject(const std::string& id);
  Response accept(const std::string& id, const std::string& body);
  Response exportProject(const std::string& id, const std::string& format);

  const ServiceConfig& config() const { return config_; }

 private:
  ServiceConfig config_;
  ProjectStore store_;
};

// Blocks until the server stops. Port 0 binds any free port. `on_ready` receives
// the bound port and a function that stops the server. Returns false if the
// port cannot be bound.
bool serve(Service& service, const std::string& host, int port,
           const std::function<void(int, std::function<void()>)>& on_ready = {});

}  // namespace tedei
