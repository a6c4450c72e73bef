#include <atomic>
#include <filesystem>
#include <fstream>
#include <future>
#include <random>
#include <set>
#include <thread>

#include "doctest.h"
#include "httplib.h"

#include "tedei/service.hpp"

using namespace tedei;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("tedei_service_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

ServiceConfig configFor(const TempDir& dir) {
  ServiceConfig c;
  c.dataDir = dir.path / "projects";
  c.staticDir = dir.path / "web";
  c.maxSentenceBytes = 200;
  return c;
}

std::string acceptBody(const std::string& sentence, long long index) {
  return json{{"sentence", sentence}, {"alternativeIndex", index}}.dump();
}

const std::string kAdenine = "Every adenine is a purine base found in DNA.";

}  // namespace

TEST_SUITE("service") {
  TEST_CASE("analyze") {
    TempDir dir;
    Service svc(configFor(dir));

    auto r = svc.analyze(json{{"sentence", "A vegetarian pizza is an interesting pizza."}}.dump());
    REQUIRE(r.status == 200);
    auto j = json::parse(r.body);
    CHECK(j["tedei"] == true);
    std::set<std::string> dl;
    for (const auto& alt : j["alternatives"]) {
      dl.insert(alt["dl"].get<std::string>());
      CHECK(alt.contains("aceSurface"));
      CHECK(alt.contains("aceTagged"));
      CHECK(alt.contains("functional"));
      CHECK(alt["provenance"].contains("lexicalizationIndex"));
    }
    CHECK(dl.count("VegetarianPizza ⊑ InterestingPizza"));
    CHECK(dl.count("VegetarianPizza ⊑ Interesting ⊓ Pizza"));

    auto driver = json::parse(svc.analyze(json{{"sentence", "Every driver drives a car."}}.dump()).body);
    CHECK(driver["alternatives"].size() >= 3);

    auto bad = svc.analyze(json{{"sentence", "Because of rain, the match was cancelled."}}.dump());
    CHECK(bad.status == 200);
    CHECK(json::parse(bad.body)["tedei"] == false);
    CHECK_FALSE(json::parse(bad.body)["diagnostics"].get<std::string>().empty());
  }

  TEST_CASE("analyze rejects malformed requests") {
    TempDir dir;
    Service svc(configFor(dir));
    CHECK(svc.analyze(json{{"sentence", ""}}.dump()).status == 400);
    CHECK(svc.analyze("not json").status == 400);
    CHECK(svc.analyze(json{{"text", "x"}}.dump()).status == 400);
    CHECK(svc.analyze(json{{"sentence", 3}}.dump()).status == 400);
    CHECK(svc.analyze(json{{"sentence", std::string(201, 'a')}}.dump()).status == 413);
  }

  TEST_CASE("analyze is idempotent") {
    TempDir dir;
    Service svc(configFor(dir));
    auto body = json{{"sentence", "Sloppy giuseppe pizza is topped with mozzarella and parmesan."}}.dump();
    CHECK(svc.analyze(body).body == svc.analyze(body).body);
  }

  TEST_CASE("project lifecycle") {
    TempDir dir;
    Service svc(configFor(dir));
    auto created = svc.createProject(json{{"name", "biology"}}.dump());
    REQUIRE(created.status == 201);
    auto id = json::parse(created.body)["id"].get<std::string>();

    auto acc = svc.accept(id, acceptBody(kAdenine, 0));
    REQUIRE(acc.status == 201);
    CHECK(json::parse(acc.body)["dl"] == "Adenine ⊑ PurineBase ⊓ ∃foundIn.DNA");

    CHECK(svc.accept(id, acceptBody(kAdenine, 0)).status == 409);
    CHECK(svc.accept(id, acceptBody(kAdenine, 99)).status == 422);
    CHECK(svc.accept(id, acceptBody(kAdenine, -1)).status == 422);
    CHECK(svc.accept("p9999", acceptBody(kAdenine, 0)).status == 404);
    CHECK(svc.accept("../etc", acceptBody(kAdenine, 0)).status == 404);
    CHECK(svc.accept(id, "{}").status == 400);

    CHECK(svc.accept(id, acceptBody("Every driver drives a car.", 1)).status == 201);

    auto got = json::parse(svc.getProject(id).body);
    CHECK(got["name"] == "biology");
    REQUIRE(got["accepted"].size() == 2);
    CHECK(got["accepted"][1]["sourceSentence"] == "Every driver drives a car.");
    CHECK(got["accepted"][1]["alternativeIndex"] == 1);
    CHECK(svc.getProject("p9999").status == 404);

    auto dl = svc.exportProject(id, "dl");
    CHECK(dl.status == 200);
    CHECK(dl.contentType.rfind("text/plain", 0) == 0);
    CHECK(dl.body == "Adenine ⊑ PurineBase ⊓ ∃foundIn.DNA\nDriver ⊑ ∀drives.Car\n");

    auto ofn = svc.exportProject(id, "ofn");
    CHECK(ofn.status == 200);
    CHECK(ofn.body.find("SubClassOf(:Adenine") != std::string::npos);

    auto exported = svc.exportProject(id, "json");
    CHECK(exported.status == 200);
    auto axioms = json::parse(exported.body)["axioms"];
    REQUIRE(axioms.size() == 2);
    CHECK(sameAxiom(axiomFromJson(axioms[0]), parseDLAxiom("Adenine ⊑ PurineBase ⊓ ∃foundIn.DNA")));
    CHECK(sameAxiom(axiomFromJson(axioms[1]), parseDLAxiom("Driver ⊑ ∀drives.Car")));

    CHECK(svc.exportProject(id, "xml").status == 400);
    CHECK(svc.exportProject("p9999", "dl").status == 404);
  }

  TEST_CASE("empty project exports a well-formed ontology") {
    TempDir dir;
    Service svc(configFor(dir));
    auto id = json::parse(svc.createProject("").body)["id"].get<std::string>();
    auto ofn = svc.exportProject(id, "ofn");
    CHECK(ofn.status == 200);
    CHECK(ofn.body.find("Ontology(<") != std::string::npos);
    CHECK(ofn.body.find("SubClassOf") == std::string::npos);
    CHECK(svc.exportProject(id, "dl").body.empty());
  }

  TEST_CASE("projects persist across service instances") {
    TempDir dir;
    std::string id;
    json before;
    {
      Service svc(configFor(dir));
      id = json::parse(svc.createProject(json{{"name", "p"}}.dump()).body)["id"].get<std::string>();
      REQUIRE(svc.accept(id, acceptBody(kAdenine, 0)).status == 201);
      before = json::parse(svc.getProject(id).body);
    }
    Service again(configFor(dir));
    CHECK(json::parse(again.getProject(id).body) == before);
    auto next = json::parse(again.createProject("{}").body)["id"].get<std::string>();
    CHECK(next != id);
    for (const auto& entry : fs::directory_iterator(dir.path / "projects"))
      CHECK(entry.path().extension() == ".json");
  }

  TEST_CASE("store round trip") {
    TempDir dir;
    ProjectStore store(dir.path);
    auto p = store.create("roundtrip");
    AcceptedAxiom rec;
    rec.axiom = normalize(parseDLAxiom("InterestingPizza ⊑ Pizza ⊓ ≥3 has.Toppings"));
    rec.sourceSentence = "An interesting pizza is a pizza that has at least 3 toppings.";
    rec.alternativeIndex = 2;
    rec.timestamp = "2026-01-01T00:00:00Z";
    p.accepted.push_back(rec);
    store.save(p);
    auto back = store.load(p.id);
    REQUIRE(back);
    CHECK(projectToJson(*back) == projectToJson(p));
    CHECK_FALSE(store.load("missing").has_value());
    CHECK_FALSE(ProjectStore::isValidId("a/b"));
  }

  TEST_CASE("concurrent accepts keep every distinct axiom") {
    TempDir dir;
    Service svc(configFor(dir));
    auto id = json::parse(svc.createProject("{}").body)["id"].get<std::string>();
    const std::vector<std::string> sentences = {"Every driver drives a car.", kAdenine, "All kids play.",
                                                "Every battery produces electricity."};
    std::vector<std::thread> threads;
    std::atomic<int> created{0}, conflicts{0};
    for (int t = 0; t < 8; ++t)
      threads.emplace_back([&, t] {
        auto r = svc.accept(id, acceptBody(sentences[static_cast<std::size_t>(t) % sentences.size()], 0));
        if (r.status == 201) ++created;
        if (r.status == 409) ++conflicts;
      });
    for (auto& th : threads) th.join();
    CHECK(created == 4);
    CHECK(conflicts == 4);
    CHECK(json::parse(svc.getProject(id).body)["accepted"].size() == 4);
  }

  TEST_CASE("HTTP routes and static files") {
    TempDir dir;
    auto cfg = configFor(dir);
    fs::create_directories(cfg.staticDir);
    std::ofstream(cfg.staticDir / "index.html") << "<html>ui</html>";
    Service svc(cfg);

    std::promise<std::pair<int, std::function<void()>>> ready;
    auto fut = ready.get_future();
    std::thread server([&] {
      serve(svc, "127.0.0.1", 0, [&](int port, std::function<void()> stop) { ready.set_value({port, stop}); });
    });
    auto [port, stop] = fut.get();

    httplib::Client cli("127.0.0.1", port);
    auto page = cli.Get("/index.html");
    REQUIRE(page);
    CHECK(page->status == 200);
    CHECK(page->body == "<html>ui</html>");

    auto an = cli.Post("/api/analyze", json{{"sentence", "All kids play."}}.dump(), "application/json");
    REQUIRE(an);
    CHECK(an->status == 200);
    CHECK(an->get_header_value("Access-Control-Allow-Origin") == "*");
    CHECK(json::parse(an->body)["alternatives"][0]["aceSurface"] == "All kids play something.");

    auto pr = cli.Post("/api/projects", "{\"name\":\"web\"}", "application/json");
    REQUIRE(pr);
    CHECK(pr->status == 201);
    auto id = json::parse(pr->body)["id"].get<std::string>();
    auto acc = cli.Post("/api/projects/" + id + "/accept", acceptBody(kAdenine, 0), "application/json");
    REQUIRE(acc);
    CHECK(acc->status == 201);
    auto ex = cli.Get("/api/projects/" + id + "/export?format=dl");
    REQUIRE(ex);
    CHECK(ex->body == "Adenine ⊑ PurineBase ⊓ ∃foundIn.DNA\n");
    auto missing = cli.Get("/api/projects/p4242");
    REQUIRE(missing);
    CHECK(missing->status == 404);
    auto empty = cli.Post("/api/analyze", "{\"sentence\":\"\"}", "application/json");
    REQUIRE(empty);
    CHECK(empty->status == 400);

    stop();
    server.join();
  }
}
