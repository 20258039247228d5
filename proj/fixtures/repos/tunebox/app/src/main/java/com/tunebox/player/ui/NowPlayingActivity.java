package com.tunebox.player.ui;

import android.app.Activity;
import android.os.Bundle;
import android.widget.ImageButton;
import android.widget.SeekBar;
import android.widget.TextView;

import com.tunebox.player.R;

public class NowPlayingActivity extends Activity {
    private TextView songTitle;
    private TextView artistName;
    private SeekBar seekBar;
    private ImageButton playPauseButton;
    private ImageButton shuffleButton;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_now_playing);
        songTitle = findViewById(R.id.song_title);
        artistName = findViewById(R.id.artist_name);
        seekBar = findViewById(R.id.seek_bar);
        playPauseButton = findViewById(R.id.play_pause_button);
        shuffleButton = findViewById(R.id.shuffle_button);
        playPauseButton.setOnClickListener(v -> togglePlayback());
        shuffleButton.setOnClickListener(v -> toggleShuffle());
    }

    private void togglePlayback() {
        playPauseButton.setSelected(!playPauseButton.isSelected());
    }

    private void toggleShuffle() {
        shuffleButton.setSelected(!shuffleButton.isSelected());
    }
}
