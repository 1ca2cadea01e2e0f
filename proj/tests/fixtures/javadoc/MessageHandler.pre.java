package com.example.events;

public interface MessageHandler {
    boolean isEnabled();

    void handle(Object message);
}
