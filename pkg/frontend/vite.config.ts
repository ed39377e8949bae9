import { defineConfig } from "vitest/config";

export default defineConfig({
  server: {
    proxy: {
      // During development the API runs on the service's default port.
      "/examples": "http://127.0.0.1:8000",
      "/fyf": "http://127.0.0.1:8000",
      "/chat": "http://127.0.0.1:8000",
      "/figures": "http://127.0.0.1:8000",
      "/health": "http://127.0.0.1:8000",
      "/meta": "http://127.0.0.1:8000",
    },
  },
  test: {
    environment: "jsdom",
  },
});
