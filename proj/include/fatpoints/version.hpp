#pragma once

#define FATPOINTS_VERSION "0.1.0"
