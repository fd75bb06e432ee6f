"""Thin HTTP client for the scoring service.

Without a server URL the client mounts the ASGI app in-process, so the CLI
exercises exactly the wire contract a remote deployment would see while still
working standalone.
"""

from __future__ import annotations

import asyncio

import httpx

REMOTE_TIMEOUT_SECONDS = 600.0
LOCAL_BASE_URL = "http://intermix.local"


class ServiceError(RuntimeError):
    """Non-2xx response from the service."""

    def __init__(self, status_code: int, detail: str):
        super().__init__(f"service returned {status_code}: {detail}")
        self.status_code = status_code
        self.detail = detail


class ServiceClient:
    def __init__(self, server: str | None = None):
        self._server = server.rstrip("/") if server else None
        self._app = None
        if self._server is None:
            from .service.app import create_app

            self._app = create_app()

    def _client(self) -> httpx.AsyncClient:
        if self._app is not None:
            return httpx.AsyncClient(
                transport=httpx.ASGITransport(app=self._app),
                base_url=LOCAL_BASE_URL,
                timeout=None,
            )
        return httpx.AsyncClient(
            base_url=self._server, timeout=httpx.Timeout(REMOTE_TIMEOUT_SECONDS)
        )

    def request(self, method: str, path: str, body: dict | None = None) -> dict:
        async def go() -> httpx.Response:
            async with self._client() as client:
                return await client.request(method, path, json=body)

        response = asyncio.run(go())
        if response.status_code >= 400:
            try:
                detail = response.json().get("detail", response.text)
            except ValueError:
                detail = response.text
            raise ServiceError(response.status_code, str(detail))
        return response.json()

    def health(self) -> dict:
        return self.request("GET", "/health")

    def analyze(self, body: dict) -> dict:
        return self.request("POST", "/analyze", body)

    def curve_by_length(self, body: dict) -> dict:
        return self.request("POST", "/curve-by-length", body)

    def generate(self, body: dict) -> dict:
        return self.request("POST", "/generate", body)

    def batch(self, body: dict) -> dict:
        return self.request("POST", "/batch", body)

    def compare(self, body: dict) -> dict:
        return self.request("POST", "/compare", body)
