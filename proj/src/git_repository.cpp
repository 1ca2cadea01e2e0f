// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include "changeprism/git_repository.hpp"

#include <fcntl.h>
#include <sys/mman.h>
#include <sys/stat.h>
#include <unistd.h>
#include <zlib.h>

#include <algorithm>
#include <climits>
#include <cstring>
#include <fstream>
#include <iterator>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "changeprism/error.hpp"

namespace changeprism::git {

namespace fs = std::filesystem;

namespace {

constexpr int kMaxDeltaDepth = 4096;
constexpr std::size_t kCacheLimit = 4096;

[[noreturn]] void corrupt(const std::string& what) { throw Error(ErrorCode::CorruptObject, what); }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string trim(std::string_view s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::uint32_t be32(const std::uint8_t* p) {
  return (std::uint32_t{p[0]} << 24) | (std::uint32_t{p[1]} << 16) | (std::uint32_t{p[2]} << 8) |
         std::uint32_t{p[3]};
}

/// Read-only memory mapping of a whole file.
class MappedFile {
 public:
  MappedFile() = default;
  explicit MappedFile(const fs::path& path) {
    int fd = ::open(path.c_str(), O_RDONLY | O_CLOEXEC);
    if (fd < 0) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    struct stat st {};
    if (::fstat(fd, &st) != 0) {
      ::close(fd);
      throw Error(ErrorCode::IoError, "cannot stat " + path.string());
    }
    size_ = static_cast<std::size_t>(st.st_size);
    if (size_ > 0) {
      void* addr = ::mmap(nullptr, size_, PROT_READ, MAP_PRIVATE, fd, 0);
      if (addr == MAP_FAILED) {
        ::close(fd);
        throw Error(ErrorCode::IoError, "cannot map " + path.string());
      }
      data_ = static_cast<const std::uint8_t*>(addr);
    }
    ::close(fd);
  }
  MappedFile(MappedFile&& other) noexcept
      : data_(std::exchange(other.data_, nullptr)), size_(std::exchange(other.size_, 0)) {}
  MappedFile& operator=(MappedFile&& other) noexcept {
    if (this != &other) {
      release();
      data_ = std::exchange(other.data_, nullptr);
      size_ = std::exchange(other.size_, 0);
    }
    return *this;
  }
  MappedFile(const MappedFile&) = delete;
  MappedFile& operator=(const MappedFile&) = delete;
  ~MappedFile() { release(); }

  const std::uint8_t* data() const noexcept { return data_; }
  std::size_t size() const noexcept { return size_; }

 private:
  void release() noexcept {
    if (data_) ::munmap(const_cast<std::uint8_t*>(data_), size_);
    data_ = nullptr;
  }

  const std::uint8_t* data_ = nullptr;
  std::size_t size_ = 0;
};

std::string inflate_exact(const std::uint8_t* data, std::size_t available, std::size_t expected) {
  std::string out(expected, '\0');
  z_stream zs{};
  if (inflateInit(&zs) != Z_OK) corrupt("zlib init failed");
  zs.next_in = const_cast<Bytef*>(data);
  zs.avail_in = static_cast<uInt>(std::min<std::size_t>(available, UINT_MAX));
  zs.next_out = reinterpret_cast<Bytef*>(out.data());
  zs.avail_out = static_cast<uInt>(expected);
  int rc = inflate(&zs, Z_FINISH);
  const auto produced = zs.total_out;
  inflateEnd(&zs);
  if (rc != Z_STREAM_END || produced != expected) corrupt("bad compressed object data");
  return out;
}

std::string inflate_all(std::string_view data) {
  z_stream zs{};
  if (inflateInit(&zs) != Z_OK) corrupt("zlib init failed");
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  zs.avail_in = static_cast<uInt>(data.size());
  std::string out;
  char buffer[16384];
  int rc;
  do {
    zs.next_out = reinterpret_cast<Bytef*>(buffer);
    zs.avail_out = sizeof buffer;
    rc = inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&zs);
      corrupt("bad compressed loose object");
    }
    out.append(buffer, sizeof buffer - zs.avail_out);
  } while (rc != Z_STREAM_END);
  inflateEnd(&zs);
  return out;
}

std::uint64_t read_varint(const std::uint8_t*& p, const std::uint8_t* end) {
  std::uint64_t value = 0;
  int shift = 0;
  std::uint8_t c;
  do {
    if (p >= end || shift > 56) corrupt("truncated delta header");
    c = *p++;
    value |= std::uint64_t{c & 0x7fu} << shift;
    shift += 7;
  } while (c & 0x80);
  return value;
}

std::string apply_delta(const std::string& base, const std::string& delta) {
  const auto* p = reinterpret_cast<const std::uint8_t*>(delta.data());
  const auto* end = p + delta.size();
  if (read_varint(p, end) != base.size()) corrupt("delta base size mismatch");
  const auto result_size = read_varint(p, end);
  std::string out;
  out.reserve(result_size);
  while (p < end) {
    const std::uint8_t op = *p++;
    if (op & 0x80) {
      std::uint64_t offset = 0;
      std::uint64_t size = 0;
      for (int i = 0; i < 4; ++i) {
        if (op & (1u << i)) {
          if (p >= end) corrupt("truncated delta copy");
          offset |= std::uint64_t{*p++} << (8 * i);
        }
      }
      for (int i = 0; i < 3; ++i) {
        if (op & (0x10u << i)) {
          if (p >= end) corrupt("truncated delta copy");
          size |= std::uint64_t{*p++} << (8 * i);
        }
      }
      if (size == 0) size = 0x10000;
      if (offset + size > base.size()) corrupt("delta copy out of range");
      out.append(base, offset, size);
    } else if (op != 0) {
      if (static_cast<std::size_t>(end - p) < op) corrupt("truncated delta insert");
      out.append(reinterpret_cast<const char*>(p), op);
      p += op;
    } else {
      corrupt("reserved delta opcode");
    }
  }
  if (out.size() != result_size) corrupt("delta result size mismatch");
  return out;
}

std::optional<ObjectType> object_type_from_name(std::string_view name) {
  if (name == "commit") return ObjectType::Commit;
  if (name == "tree") return ObjectType::Tree;
  if (name == "blob") return ObjectType::Blob;
  if (name == "tag") return ObjectType::Tag;
  return std::nullopt;
}

class Pack {
 public:
  explicit Pack(const fs::path& idx_path)
      : idx_(idx_path), pack_(fs::path(idx_path).replace_extension(".pack")) {
    const auto* d = idx_.data();
    if (idx_.size() >= 8 && d[0] == 0xff && d[1] == 't' && d[2] == 'O' && d[3] == 'c') {
      version_ = be32(d + 4);
      if (version_ != 2) corrupt("unsupported pack index version in " + idx_path.string());
      fanout_ = d + 8;
    } else {
      version_ = 1;
      fanout_ = d;
    }
    if (idx_.size() < static_cast<std::size_t>(fanout_ - d) + 1024) corrupt("truncated pack index");
    count_ = be32(fanout_ + 255 * 4);
    const std::size_t need = version_ == 2 ? 8 + 1024 + std::size_t{count_} * 28
                                           : 1024 + std::size_t{count_} * 24;
    if (idx_.size() < need) corrupt("truncated pack index " + idx_path.string());
    if (pack_.size() < 12 || std::memcmp(pack_.data(), "PACK", 4) != 0) {
      corrupt("bad pack header in " + idx_path.string());
    }
  }

  std::optional<std::uint64_t> find(const ObjectId& id) const {
    const std::uint32_t lo_start = id.bytes[0] == 0 ? 0 : be32(fanout_ + (id.bytes[0] - 1) * 4);
    std::uint32_t lo = lo_start;
    std::uint32_t hi = be32(fanout_ + id.bytes[0] * 4);
    while (lo < hi) {
      const std::uint32_t mid = lo + (hi - lo) / 2;
      const int cmp = std::memcmp(id_at(mid), id.bytes.data(), 20);
      if (cmp == 0) return offset_at(mid);
      if (cmp < 0) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return std::nullopt;
  }

  const std::uint8_t* data() const noexcept { return pack_.data(); }
  std::size_t size() const noexcept { return pack_.size(); }

 private:
  const std::uint8_t* id_at(std::uint32_t i) const {
    return version_ == 2 ? fanout_ + 1024 + std::size_t{i} * 20 : fanout_ + 1024 + std::size_t{i} * 24 + 4;
  }

  std::uint64_t offset_at(std::uint32_t i) const {
    if (version_ == 1) return be32(fanout_ + 1024 + std::size_t{i} * 24);
    const auto* offsets = fanout_ + 1024 + std::size_t{count_} * 24;
    const std::uint32_t small = be32(offsets + std::size_t{i} * 4);
    if (!(small & 0x80000000u)) return small;
    const auto* large = offsets + std::size_t{count_} * 4 + std::size_t{small & 0x7fffffffu} * 8;
    if (large + 8 > idx_.data() + idx_.size()) corrupt("bad large pack offset");
    return (std::uint64_t{be32(large)} << 32) | be32(large + 4);
  }

  MappedFile idx_;
  MappedFile pack_;
  std::uint32_t version_ = 2;
  const std::uint8_t* fanout_ = nullptr;
  std::uint32_t count_ = 0;
};

}  // namespace

// -- ObjectId ----------------------------------------------------------------

std::optional<ObjectId> ObjectId::from_hex(std::string_view hex) {
  if (hex.size() != 40) return std::nullopt;
  ObjectId id;
  for (std::size_t i = 0; i < 20; ++i) {
    int hi = hex_value(hex[2 * i]);
    int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    id.bytes[i] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return id;
}

ObjectId ObjectId::from_raw(std::string_view raw20) {
  ObjectId id;
  std::memcpy(id.bytes.data(), raw20.data(), 20);
  return id;
}

std::string ObjectId::hex() const {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(40, '0');
  for (std::size_t i = 0; i < 20; ++i) {
    out[2 * i] = kHex[bytes[i] >> 4];
    out[2 * i + 1] = kHex[bytes[i] & 15];
  }
  return out;
}

// -- object parsing ------------------------------------------------------------

namespace {

Signature parse_signature(std::string_view line) {
  Signature sig;
  auto lt = line.find('<');
  auto gt = line.rfind('>');
  if (lt == std::string_view::npos || gt == std::string_view::npos || gt < lt) {
    sig.name = trim(line);
    return sig;
  }
  sig.name = trim(line.substr(0, lt));
  sig.email = std::string(line.substr(lt + 1, gt - lt - 1));
  std::istringstream rest{std::string(line.substr(gt + 1))};
  long long time = 0;
  if (rest >> time) sig.time = time;
  return sig;
}

}  // namespace

CommitObject parse_commit(std::string_view data) {
  CommitObject commit;
  bool have_tree = false;
  std::size_t pos = 0;
  while (pos < data.size()) {
    auto eol = data.find('\n', pos);
    if (eol == std::string_view::npos) eol = data.size();
    const auto line = data.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) {
      commit.message = std::string(data.substr(std::min(pos, data.size())));
      break;
    }
    if (line.front() == ' ') continue;  // continuation of a multi-line header
    const auto space = line.find(' ');
    const auto key = line.substr(0, space);
    const auto value = space == std::string_view::npos ? std::string_view{} : line.substr(space + 1);
    if (key == "tree") {
      auto id = ObjectId::from_hex(value);
      if (!id) corrupt("bad tree id in commit");
      commit.tree = *id;
      have_tree = true;
    } else if (key == "parent") {
      auto id = ObjectId::from_hex(value);
      if (!id) corrupt("bad parent id in commit");
      commit.parents.push_back(*id);
    } else if (key == "author") {
      commit.author = parse_signature(value);
    } else if (key == "committer") {
      commit.committer = parse_signature(value);
    }
  }
  if (!have_tree) corrupt("commit without tree");
  return commit;
}

std::vector<TreeEntry> parse_tree(std::string_view data) {
  std::vector<TreeEntry> entries;
  std::size_t pos = 0;
  while (pos < data.size()) {
    const auto space = data.find(' ', pos);
    const auto nul = data.find('\0', space == std::string_view::npos ? pos : space);
    if (space == std::string_view::npos || nul == std::string_view::npos || nul + 21 > data.size()) {
      corrupt("malformed tree entry");
    }
    TreeEntry entry;
    for (std::size_t i = pos; i < space; ++i) {
      if (data[i] < '0' || data[i] > '7') corrupt("malformed tree mode");
      entry.mode = entry.mode * 8 + static_cast<std::uint32_t>(data[i] - '0');
    }
    entry.name = std::string(data.substr(space + 1, nul - space - 1));
    entry.id = ObjectId::from_raw(data.substr(nul + 1, 20));
    entries.push_back(std::move(entry));
    pos = nul + 21;
  }
  return entries;
}

// -- Repository --------------------------------------------------------------

struct Repository::Impl {
  fs::path git_dir;
  fs::path common_dir;
  std::vector<fs::path> object_dirs;
  std::vector<Pack> packs;

  mutable std::mutex cache_mutex;
  mutable std::unordered_map<std::uint64_t, std::shared_ptr<const RawObject>> delta_base_cache;

  std::optional<RawObject> read(const ObjectId& id, int depth) const {
    for (const auto& dir : object_dirs) {
      const auto hex = id.hex();
      if (auto raw = read_file(dir / hex.substr(0, 2) / hex.substr(2))) return parse_loose(*raw);
    }
    for (std::size_t i = 0; i < packs.size(); ++i) {
      if (auto offset = packs[i].find(id)) return read_packed(i, *offset, depth);
    }
    return std::nullopt;
  }

  static RawObject parse_loose(const std::string& compressed) {
    auto data = inflate_all(compressed);
    const auto space = data.find(' ');
    const auto nul = data.find('\0');
    if (space == std::string::npos || nul == std::string::npos || space > nul) {
      corrupt("malformed loose object header");
    }
    auto type = object_type_from_name(std::string_view(data).substr(0, space));
    if (!type) corrupt("unknown loose object type");
    return {*type, data.substr(nul + 1)};
  }

  RawObject read_packed(std::size_t pack_index, std::uint64_t offset, int depth) const {
    if (depth > kMaxDeltaDepth) corrupt("delta chain too deep");
    const Pack& pack = packs[pack_index];
    if (offset >= pack.size()) corrupt("pack offset out of range");
    const std::uint8_t* p = pack.data() + offset;
    const std::uint8_t* end = pack.data() + pack.size();

    std::uint8_t c = *p++;
    const int type = (c >> 4) & 7;
    std::uint64_t size = c & 15;
    int shift = 4;
    while (c & 0x80) {
      if (p >= end || shift > 57) corrupt("truncated pack entry header");
      c = *p++;
      size |= std::uint64_t{c & 0x7fu} << shift;
      shift += 7;
    }

    if (type >= 1 && type <= 4) {
      return {static_cast<ObjectType>(type),
              inflate_exact(p, static_cast<std::size_t>(end - p), static_cast<std::size_t>(size))};
    }
    std::shared_ptr<const RawObject> base;
    if (type == 6) {
      if (p >= end) corrupt("truncated offset delta");
      c = *p++;
      std::uint64_t back = c & 0x7f;
      while (c & 0x80) {
        if (p >= end) corrupt("truncated offset delta");
        c = *p++;
        back = ((back + 1) << 7) | (c & 0x7f);
      }
      if (back == 0 || back > offset) corrupt("bad offset delta base");
      base = cached_base(pack_index, offset - back, depth);
    } else if (type == 7) {
      if (end - p < 20) corrupt("truncated reference delta");
      auto base_id = ObjectId::from_raw(std::string_view(reinterpret_cast<const char*>(p), 20));
      p += 20;
      auto object = read(base_id, depth + 1);
      if (!object) corrupt("missing delta base " + base_id.hex());
      base = std::make_shared<const RawObject>(std::move(*object));
    } else {
      corrupt("unknown pack entry type " + std::to_string(type));
    }
    auto delta = inflate_exact(p, static_cast<std::size_t>(end - p), static_cast<std::size_t>(size));
    return {base->type, apply_delta(base->data, delta)};
  }

  std::shared_ptr<const RawObject> cached_base(std::size_t pack_index, std::uint64_t offset,
                                               int depth) const {
    const std::uint64_t key = (std::uint64_t{pack_index} << 48) ^ offset;
    {
      std::lock_guard lock(cache_mutex);
      auto it = delta_base_cache.find(key);
      if (it != delta_base_cache.end()) return it->second;
    }
    auto object = std::make_shared<const RawObject>(read_packed(pack_index, offset, depth + 1));
    std::lock_guard lock(cache_mutex);
    if (delta_base_cache.size() >= kCacheLimit) delta_base_cache.clear();
    delta_base_cache.emplace(key, object);
    return object;
  }

  std::optional<std::string> ref_target(std::string_view refname) const {
    if (refname == "HEAD") return read_file(git_dir / "HEAD");
    for (const auto& dir : {git_dir, common_dir}) {
      std::error_code ec;
      const auto path = dir / std::string(refname);
      if (fs::is_regular_file(path, ec)) return read_file(path);
    }
    if (auto packed = read_file(common_dir / "packed-refs")) {
      std::istringstream lines(*packed);
      std::string line;
      while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line[0] == '^') continue;
        auto space = line.find(' ');
        if (space != std::string::npos && trim(line.substr(space + 1)) == refname) {
          return line.substr(0, space);
        }
      }
    }
    return std::nullopt;
  }

  std::optional<ObjectId> peel(ObjectId id) const {
    for (int i = 0; i < 16; ++i) {
      auto object = read(id, 0);
      if (!object) return std::nullopt;
      if (object->type != ObjectType::Tag) return id;
      auto pos = object->data.find("object ");
      if (pos != 0) return std::nullopt;
      auto target = ObjectId::from_hex(std::string_view(object->data).substr(7, 40));
      if (!target) return std::nullopt;
      id = *target;
    }
    return std::nullopt;
  }
};

Repository::Repository(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
Repository::Repository(Repository&&) noexcept = default;
Repository& Repository::operator=(Repository&&) noexcept = default;
Repository::~Repository() = default;

Repository Repository::open(const fs::path& path) {
  std::error_code ec;
  if (!fs::is_directory(path, ec)) {
    throw Error(ErrorCode::NotARepository, path.string() + " is not a directory");
  }
  fs::path git_dir;
  const auto dot_git = path / ".git";
  if (fs::is_directory(dot_git, ec)) {
    git_dir = dot_git;
  } else if (fs::is_regular_file(dot_git, ec)) {
    auto content = trim(read_file(dot_git).value_or(""));
    if (content.rfind("gitdir:", 0) != 0) {
      throw Error(ErrorCode::NotARepository, dot_git.string() + " is not a gitdir link");
    }
    fs::path target = trim(content.substr(7));
    git_dir = target.is_absolute() ? target : path / target;
  } else if (fs::is_regular_file(path / "HEAD", ec) && fs::is_directory(path / "objects", ec)) {
    git_dir = path;
  } else {
    throw Error(ErrorCode::NotARepository, path.string() + " is not a git repository");
  }

  auto impl = std::make_unique<Impl>();
  impl->git_dir = git_dir;
  impl->common_dir = git_dir;
  if (auto common = read_file(git_dir / "commondir")) {
    fs::path target = trim(*common);
    impl->common_dir = target.is_absolute() ? target : git_dir / target;
  }
  const auto objects = impl->common_dir / "objects";
  if (!fs::is_regular_file(git_dir / "HEAD", ec) || !fs::is_directory(objects, ec)) {
    throw Error(ErrorCode::NotARepository, path.string() + " has no HEAD or object store");
  }
  impl->object_dirs.push_back(objects);
  if (auto alternates = read_file(objects / "info" / "alternates")) {
    std::istringstream lines(*alternates);
    std::string line;
    while (std::getline(lines, line)) {
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      fs::path alt = line;
      impl->object_dirs.push_back(alt.is_absolute() ? alt : objects / alt);
    }
  }
  for (const auto& dir : impl->object_dirs) {
    std::vector<fs::path> indexes;
    for (const auto& entry : fs::directory_iterator(dir / "pack", ec)) {
      if (entry.path().extension() == ".idx") indexes.push_back(entry.path());
    }
    std::sort(indexes.begin(), indexes.end());
    for (const auto& idx : indexes) {
      if (fs::exists(fs::path(idx).replace_extension(".pack"), ec)) impl->packs.emplace_back(idx);
    }
  }
  return Repository(std::move(impl));
}

std::optional<RawObject> Repository::read(const ObjectId& id) const { return impl_->read(id, 0); }

std::optional<ObjectId> Repository::resolve_ref(std::string_view refname) const {
  std::string name(refname);
  for (int depth = 0; depth < 10; ++depth) {
    auto target = impl_->ref_target(name);
    if (!target) return std::nullopt;
    auto value = trim(*target);
    if (value.rfind("ref:", 0) == 0) {
      name = trim(value.substr(4));
      continue;
    }
    auto id = ObjectId::from_hex(value);
    if (!id) return std::nullopt;
    return impl_->peel(*id);
  }
  return std::nullopt;
}

std::optional<ObjectId> Repository::resolve_revision(std::string_view revision) const {
  if (revision.empty()) return std::nullopt;
  if (revision == "HEAD" || revision.rfind("refs/", 0) == 0) return resolve_ref(revision);
  for (const char* prefix : {"refs/heads/", "refs/tags/", "refs/remotes/"}) {
    if (auto id = resolve_ref(std::string(prefix) + std::string(revision))) return id;
  }
  if (auto id = ObjectId::from_hex(revision)) {
    if (read(*id)) return impl_->peel(*id);
  }
  return std::nullopt;
}

CommitObject Repository::read_commit(const ObjectId& id) const {
  auto object = read(id);
  if (!object || object->type != ObjectType::Commit) {
    throw Error(ErrorCode::UnknownCommit, id.hex() + " is not a commit in this repository");
  }
  return parse_commit(object->data);
}

std::optional<std::string> Repository::read_path(const ObjectId& tree, std::string_view path) const {
  ObjectId current = tree;
  std::size_t pos = 0;
  while (true) {
    auto object = read(current);
    if (!object || object->type != ObjectType::Tree) return std::nullopt;
    const auto slash = path.find('/', pos);
    const auto part = path.substr(pos, slash == std::string_view::npos ? std::string_view::npos : slash - pos);
    std::optional<TreeEntry> found;
    for (auto& entry : parse_tree(object->data)) {
      if (entry.name == part) {
        found = std::move(entry);
        break;
      }
    }
    if (!found) return std::nullopt;
    if (slash == std::string_view::npos) {
      if (!found->is_regular_file()) return std::nullopt;
      auto blob = read(found->id);
      if (!blob || blob->type != ObjectType::Blob) return std::nullopt;
      return std::move(blob->data);
    }
    current = found->id;
    pos = slash + 1;
  }
}

const fs::path& Repository::git_dir() const noexcept { return impl_->git_dir; }

}  // namespace changeprism::git
