#pragma once

#define TWOSTAR_VERSION "0.1.0"
