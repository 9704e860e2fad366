#include "nvmio/devices.hpp"

#include <gtest/gtest.h>

#include <random>

#include "nvmio/error.hpp"

namespace nvmio {
namespace {

TEST(Devices, BuiltinBandwidthsMatchMeasuredPlatform) {
  const auto& p = builtin_profiles();
  ASSERT_EQ(p.devices.size(), 3u);
  EXPECT_DOUBLE_EQ(builtin_device("HDD").bdw_seq(), 58.11);
  EXPECT_DOUBLE_EQ(builtin_device("HDD").bdw_ran(), 26.72);
  EXPECT_DOUBLE_EQ(builtin_device("SSD").bdw_seq(), 110.98);
  EXPECT_DOUBLE_EQ(builtin_device("SSD").bdw_ran(), 101.86);
  EXPECT_DOUBLE_EQ(builtin_device("NVM").bdw_seq(), 112.31);
  EXPECT_DOUBLE_EQ(builtin_device("NVM").bdw_ran(), 110.51);
  EXPECT_DOUBLE_EQ(p.memory.read_bw(), 1000.0);
  EXPECT_DOUBLE_EQ(p.memory.write_bw(), 900.0);
}

TEST(Devices, MemoryIsFasterThanEveryDevice) {
  const auto& p = builtin_profiles();
  for (const auto& [name, d] : p.devices) {
    EXPECT_GE(p.memory.read_bw(), d.bdw_seq()) << name;
    EXPECT_GE(p.memory.write_bw(), d.bdw_seq()) << name;
  }
}

TEST(Devices, UnknownNameThrows) {
  EXPECT_THROW(builtin_device("FOO"), UnknownDeviceError);
  EXPECT_FALSE(is_builtin_device("FOO"));
  EXPECT_TRUE(is_builtin_device("NVM"));
}

TEST(Devices, ConstructionRejectsInvalidBandwidths) {
  EXPECT_THROW(DeviceProfile("x", 10.0, 20.0), std::invalid_argument);
  EXPECT_THROW(DeviceProfile("x", 0.0, 0.0), std::invalid_argument);
  EXPECT_THROW(DeviceProfile("x", 10.0, -1.0), std::invalid_argument);
  EXPECT_THROW(DeviceProfile("", 10.0, 5.0), std::invalid_argument);
  EXPECT_NO_THROW(DeviceProfile("x", 10.0, 10.0));
  EXPECT_THROW(MemoryProfile(0.0, 1.0), std::invalid_argument);
}

TEST(Devices, ServiceTimeExamples) {
  const auto& hdd = builtin_device("HDD");
  EXPECT_NEAR(service_time(hdd, 16384.0, AccessPattern::Random), 613.17, 0.005);
  // 1024 / 58.11 by hand.
  EXPECT_NEAR(service_time(hdd, 1024.0, AccessPattern::Sequential), 17.62, 0.005);
  for (const auto& [name, d] : builtin_profiles().devices) {
    EXPECT_EQ(service_time(d, 0.0, AccessPattern::Sequential), 0.0);
  }
  EXPECT_THROW(service_time(hdd, -1.0, AccessPattern::Random),
               std::invalid_argument);
}

TEST(Devices, ServiceTimeIsLinearAndSequentialIsFaster) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> size(0.0, 1e5);
  for (int i = 0; i < 500; ++i) {
    const double a = size(rng);
    const double b = size(rng);
    for (const auto& [name, d] : builtin_profiles().devices) {
      for (auto p : {AccessPattern::Sequential, AccessPattern::Random}) {
        const double whole = service_time(d, a + b, p);
        const double parts = service_time(d, a, p) + service_time(d, b, p);
        EXPECT_LE(std::abs(whole - parts), 1e-12 * std::max(1.0, whole));
      }
      EXPECT_LE(service_time(d, a, AccessPattern::Sequential),
                service_time(d, a, AccessPattern::Random));
    }
  }
}

TEST(Devices, PatternNames) {
  EXPECT_EQ(parse_access_pattern("random"), AccessPattern::Random);
  EXPECT_EQ(parse_access_pattern("sequential"), AccessPattern::Sequential);
  EXPECT_THROW(parse_access_pattern("zigzag"), std::invalid_argument);
}

}  // namespace
}  // namespace nvmio
